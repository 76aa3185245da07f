"""
Tree of a family of token paths.

Usage:
    python manage.py path_tree < paths.txt
"""

from trees.services import TreeService

from ._base import TreeCommand


class Command(TreeCommand):
    help = (
        'Print the prefix tree of the input paths, each vertex labelled by '
        'the token on the edge above it. Input: one path per line, tokens '
        'separated by whitespace; an empty line is the origin.'
    )

    def add_arguments(self, parser):
        self.add_tree_format_arguments(parser)

    def handle(self, *args, **options):
        return TreeService.path_tree(
            self.read_input(options),
            output_format=options['format'],
            labels=options['labels'] != 'none',
        )
