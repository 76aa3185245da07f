"""
Services behind the command-line surface.

Each operation takes the text of an input file plus the command
options, runs the domain modules and returns the text to print.
Settings (four-point limits, seed, DOT template directory) are read
here and passed down explicitly.
"""

import logging

from django.conf import settings

from .contour import build_merge, quotient_tree
from .exceptions import IndexOutOfRange
from .excursion import decode, encode, random_excursion
from .formats import (
    format_excursion,
    parse_edge_list,
    parse_excursion,
    parse_field,
    parse_matrix,
    parse_paths,
    parse_weighted_graph,
    quotient_newick,
    render_dot,
)
from .metric_index import FourPointReport, build_index, four_point_check, graph_metric
from .numbers import format_number
from .path_forest import PathForest
from .tree_core import RootedTree, canonical_newick

logger = logging.getLogger(__name__)

NEWICK = 'newick'
DOT = 'dot'


class TreeService:
    """
    Text in, text out operations for every toolkit command.

    Output is deterministic: Newick is canonical and DOT lists vertices
    by id and edges in lexicographic order.
    """

    # =========================
    # Tree output
    # =========================
    @staticmethod
    def render_tree(tree: RootedTree, output_format: str, labels: bool, **decoration) -> str:
        if output_format == DOT:
            return render_dot(
                tree,
                labels=labels,
                template_dir=settings.DOT_TEMPLATES_DIR,
                **decoration,
            )
        return canonical_newick(tree, labels=labels, lengths=decoration.get('lengths'))

    # =========================
    # Excursion codec
    # =========================
    @staticmethod
    def encode(text: str) -> str:
        tree = parse_edge_list(text)
        exc = encode(tree)
        logger.info('Encoded tree with %d edges', tree.edge_count)
        return format_excursion(exc)

    @staticmethod
    def decode(text: str, output_format: str = NEWICK, labels: bool = True) -> str:
        tree = decode(parse_excursion(text))
        return TreeService.render_tree(tree, output_format, labels)

    @staticmethod
    def excursion_distance(text: str, m: int, n: int) -> str:
        return str(parse_excursion(text).distance(m, n))

    @staticmethod
    def random_excursion(edge_count: int, seed: int | None = None) -> str:
        if seed is None:
            seed = settings.TREEKIT_SEED
        return format_excursion(random_excursion(edge_count, seed))

    # =========================
    # Tree metrics
    # =========================
    @staticmethod
    def tree_distance(text: str, a: int, b: int) -> str:
        index = build_index(parse_edge_list(text))
        return str(index.dist(a, b))

    @staticmethod
    def four_point(text: str, input_format: str = 'matrix') -> FourPointReport:
        """
        Run the four-point test on a matrix or on the metric of a graph.

        Args:
            text: Matrix text, or weighted graph text when
                ``input_format`` is ``'graph'``
            input_format: 'matrix' or 'graph'

        Returns:
            The FourPointReport
        """
        if input_format == 'graph':
            metric = graph_metric(*parse_weighted_graph(text))
        else:
            metric = parse_matrix(text)
        return four_point_check(
            metric,
            tolerance=settings.FOUR_POINT_TOLERANCE,
            exhaustive_limit=settings.FOUR_POINT_EXHAUSTIVE_LIMIT,
            samples=settings.FOUR_POINT_SAMPLES,
            seed=settings.TREEKIT_SEED,
        )

    @staticmethod
    def format_report(report: FourPointReport) -> str:
        witness = ' '.join(map(str, report.witness)) if report.witness else '-'
        lines = [
            f'zero_hyperbolic {"true" if report.is_zero_hyperbolic else "false"}',
            f'worst_violation {format_number(report.worst_violation)}',
            f'witness {witness}',
        ]
        if report.sampled:
            lines.append(f'sampled {report.quadruples_checked}')
        return '\n'.join(lines)

    # =========================
    # Contour trees
    # =========================
    @staticmethod
    def contour_tree(text: str, output_format: str = NEWICK, labels: bool = True) -> str:
        quotient = quotient_tree(build_merge(parse_field(text)))
        if output_format == DOT:
            lengths = {c: length for (_, c), length in quotient.edge_length.items()}
            return TreeService.render_tree(
                quotient.tree,
                DOT,
                labels,
                heights=quotient.height_of,
                lengths=lengths,
                members=quotient.members,
            )
        return quotient_newick(quotient, labels=labels)

    @staticmethod
    def merge_level(text: str, y: int, z: int) -> str:
        merge = build_merge(parse_field(text))
        return format_number(merge.level(y, z))

    # =========================
    # Path forests
    # =========================
    @staticmethod
    def load_paths(text: str) -> tuple[PathForest, list[int]]:
        """Insert every line; returns the forest and the path id of each line."""
        forest = PathForest()
        ids = [forest.insert(tokens) for tokens in parse_paths(text)]
        logger.info('Loaded %d lines, %d distinct paths', len(ids), len(forest))
        return forest, ids

    @staticmethod
    def path_tree(text: str, output_format: str = NEWICK, labels: bool = True) -> str:
        forest, _ = TreeService.load_paths(text)
        tree, _ = forest.to_tree()
        return TreeService.render_tree(tree, output_format, labels)

    @staticmethod
    def path_distance(text: str, i: int, j: int) -> str:
        forest, ids = TreeService.load_paths(text)
        for line in (i, j):
            if not 0 <= line < len(ids):
                raise IndexOutOfRange(line, len(ids))
        return str(forest.distance(ids[i], ids[j]))
