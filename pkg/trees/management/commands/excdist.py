"""
Tree distance between two times of an excursion.

Usage:
    python manage.py excdist 3 7 < exc.txt
"""

from trees.services import TreeService

from ._base import TreeCommand


class Command(TreeCommand):
    help = (
        'Print h(m) + h(n) - 2 min h over the interval between m and n. '
        'Input: one line of excursion heights.'
    )

    def add_arguments(self, parser):
        parser.add_argument('m', type=int, help='First time index')
        parser.add_argument('n', type=int, help='Second time index')

    def handle(self, *args, **options):
        return TreeService.excursion_distance(
            self.read_input(options), options['m'], options['n'],
        )
