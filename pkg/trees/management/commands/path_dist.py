"""
Separation distance between two input paths.

Usage:
    python manage.py path_dist 0 2 < paths.txt
"""

from trees.services import TreeService

from ._base import TreeCommand


class Command(TreeCommand):
    help = (
        'Print len(p) + len(q) - 2 * (longest common prefix) for the paths '
        'on lines i and j, counted from 0. Input: one path per line.'
    )

    def add_arguments(self, parser):
        parser.add_argument('i', type=int, help='Line of the first path')
        parser.add_argument('j', type=int, help='Line of the second path')

    def handle(self, *args, **options):
        return TreeService.path_distance(
            self.read_input(options), options['i'], options['j'],
        )
