"""
Contour tree of a scalar field on a graph.

Usage:
    python manage.py contour_tree < field.txt
    python manage.py contour_tree --format dot < field.txt
"""

from trees.services import TreeService

from ._base import TreeCommand


class Command(TreeCommand):
    help = (
        'Print the contour tree with class heights and edge lengths. Input: '
        'a line "n m", then n lines "vertex value" with nonnegative values, '
        'then m lines "u v". The graph must be connected.'
    )

    def add_arguments(self, parser):
        self.add_tree_format_arguments(parser)

    def handle(self, *args, **options):
        return TreeService.contour_tree(
            self.read_input(options),
            output_format=options['format'],
            labels=options['labels'] != 'none',
        )
