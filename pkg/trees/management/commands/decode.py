"""
Decode an excursion into its rooted tree.

Usage:
    python manage.py decode < exc.txt
    python manage.py decode --format dot --labels none < exc.txt
"""

from trees.services import TreeService

from ._base import TreeCommand


class Command(TreeCommand):
    help = (
        'Print the tree coded by an excursion. Input: one line of integers '
        'h(0) .. h(2m), starting and ending at 0, steps of +1 or -1, never '
        'negative. Vertex ids follow the order of first visit, root 0.'
    )

    def add_arguments(self, parser):
        self.add_tree_format_arguments(parser)

    def handle(self, *args, **options):
        return TreeService.decode(
            self.read_input(options),
            output_format=options['format'],
            labels=options['labels'] != 'none',
        )
