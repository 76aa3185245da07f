"""Command-line entry point for the tree toolkit."""

import os
import sys


def main(argv: list[str] | None = None) -> None:
    """Run a toolkit command, e.g. ``treekit encode < tree.txt``."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'project.settings')
    args = sys.argv if argv is None else argv
    if args[1:] in (['--version'], ['version']):
        from trees import __version__

        sys.stdout.write(__version__ + '\n')
        return
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    execute_from_command_line(args)


if __name__ == '__main__':
    main()
