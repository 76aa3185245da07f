"""
Uniform random excursion.

Usage:
    python manage.py random_exc 10
    python manage.py random_exc 10 --seed 7
"""

from trees.services import TreeService

from ._base import TreeCommand


class Command(TreeCommand):
    help = 'Print a uniformly random excursion with EDGE_COUNT edges.'
    reads_input = False

    def add_arguments(self, parser):
        parser.add_argument('edge_count', type=int, metavar='EDGE_COUNT')
        parser.add_argument(
            '--seed',
            type=int,
            default=None,
            help='Generator seed (default: TREEKIT_SEED)',
        )

    def handle(self, *args, **options):
        return TreeService.random_excursion(options['edge_count'], options['seed'])
