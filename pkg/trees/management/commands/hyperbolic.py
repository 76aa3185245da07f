"""
Four-point (0-hyperbolicity) test of a finite metric.

Usage:
    python manage.py hyperbolic < matrix.txt
    python manage.py hyperbolic --format graph < graph.txt

Exit status 0 when the metric is 0-hyperbolic, 3 when it is not.
"""

from django.core.management.base import CommandError

from trees.exceptions import ExitStatus
from trees.services import TreeService

from ._base import TreeCommand


class Command(TreeCommand):
    help = (
        'Test the four-point condition with delta 0. Input (matrix): a line '
        'n, then n rows of n numbers. Input (graph): a line "n m", then m '
        'lines "u v length"; the shortest-path metric is tested. Prints '
        'zero_hyperbolic, worst_violation and witness lines.'
    )

    def add_arguments(self, parser):
        parser.add_argument(
            '--format',
            choices=('matrix', 'graph'),
            default='matrix',
            help='Input format',
        )

    def handle(self, *args, **options):
        report = TreeService.four_point(self.read_input(options), options['format'])
        self.stdout.write(TreeService.format_report(report))
        if not report.is_zero_hyperbolic:
            raise CommandError(
                'four-point condition violated',
                returncode=ExitStatus.PROPERTY_VIOLATED,
            )
