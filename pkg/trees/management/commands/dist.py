"""
Distance between two vertices of a rooted tree.

Usage:
    python manage.py dist 2 3 < tree.txt
"""

from trees.services import TreeService

from ._base import TreeCommand


class Command(TreeCommand):
    help = (
        'Print the number of edges between vertices a and b. Input: a line '
        '"n root", then n-1 lines "parent child".'
    )

    def add_arguments(self, parser):
        parser.add_argument('a', type=int, help='First vertex id')
        parser.add_argument('b', type=int, help='Second vertex id')

    def handle(self, *args, **options):
        return TreeService.tree_distance(
            self.read_input(options), options['a'], options['b'],
        )
