"""
Merge level of two vertices of a scalar field.

Usage:
    python manage.py lambda 0 4 < field.txt
"""

from trees.services import TreeService

from ._base import TreeCommand


class Command(TreeCommand):
    help = (
        'Print the highest level at which y and z lie in one component of '
        '{h >= level}. Input: the scalar field format of contour_tree.'
    )

    def add_arguments(self, parser):
        parser.add_argument('y', type=int, help='First vertex id')
        parser.add_argument('z', type=int, help='Second vertex id')

    def handle(self, *args, **options):
        return TreeService.merge_level(
            self.read_input(options), options['y'], options['z'],
        )
