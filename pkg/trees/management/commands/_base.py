"""
Shared behaviour of the toolkit commands.

- ``--input PATH`` (standard input when omitted; ``call_command`` may
  pass the text through the ``stdin`` option instead)
- toolkit errors become ``CommandError`` with the matching exit status
- argument errors exit with status 1 instead of argparse's 2
"""

import logging
import sys
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

import trees
from trees.exceptions import ExitStatus, TreeToolkitError

logger = logging.getLogger(__name__)

TREE_FORMATS = ('newick', 'dot')
LABEL_MODES = ('ids', 'none')


class TreeCommand(BaseCommand):
    requires_system_checks = []
    stealth_options = ('stdin',)
    reads_input = True

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._arguments_parsed = False

    def get_version(self) -> str:
        return trees.__version__

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        if self.reads_input:
            parser.add_argument(
                '--input',
                metavar='PATH',
                default=None,
                help='Read the input from PATH instead of standard input',
            )
        return parser

    @staticmethod
    def add_tree_format_arguments(parser) -> None:
        parser.add_argument(
            '--format',
            choices=TREE_FORMATS,
            default='newick',
            help='Output format: canonical Newick or Graphviz DOT',
        )
        parser.add_argument(
            '--labels',
            choices=LABEL_MODES,
            default='ids',
            help='Write vertex labels (ids, or tokens for path trees) or the bare shape',
        )

    # =========================
    # Execution
    # =========================
    def run_from_argv(self, argv):
        try:
            super().run_from_argv(argv)
        except SystemExit as exc:
            if not self._arguments_parsed and exc.code == 2:
                raise SystemExit(ExitStatus.BAD_INPUT) from exc
            raise

    def execute(self, *args, **options):
        self._arguments_parsed = True
        try:
            return super().execute(*args, **options)
        except TreeToolkitError as exc:
            logger.debug('%s failed: %s', type(self).__module__, exc)
            raise CommandError(str(exc), returncode=exc.exit_status) from exc

    def read_input(self, options) -> str:
        path = options.get('input')
        if path:
            try:
                return Path(path).read_text(encoding='utf-8')
            except OSError as exc:
                raise CommandError(
                    f'cannot read {path}: {exc.strerror}',
                    returncode=ExitStatus.BAD_INPUT,
                ) from exc
        stream = options.get('stdin') or sys.stdin
        return stream if isinstance(stream, str) else stream.read()
