"""
Encode a rooted tree as its excursion.

Usage:
    python manage.py encode < tree.txt
    python manage.py encode --input tree.txt
"""

from trees.services import TreeService

from ._base import TreeCommand


class Command(TreeCommand):
    help = (
        'Print the height sequence of the depth-first walk of a tree. '
        'Input: a line "n root", then n-1 lines "parent child"; the order '
        'of the lines is the child order. "#" starts a comment.'
    )

    def handle(self, *args, **options):
        return TreeService.encode(self.read_input(options))
