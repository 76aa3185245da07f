"""
Tree metric queries and the four-point test.

``TreeMetricIndex`` stores an Euler tour of a rooted tree with a sparse
table over the tour depths, which gives the deepest common ancestor
``v1`` of two vertices in constant time and with it
``d(x, y) = d(x, v) + d(y, v) - 2 d(v, v1)``.

``four_point_check`` decides whether a finite metric is 0-hyperbolic:
for every quadruple the two largest of the three pair sums must agree.
"""

import logging
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from decimal import Decimal
from itertools import combinations, islice
from numbers import Real

import networkx as nx
import numpy as np

from .exceptions import DisconnectedGraph, InvalidInput, NotAMetric
from .numbers import seeded_rng
from .range_min import SparseTable
from .tree_core import RootedTree

logger = logging.getLogger(__name__)

QUADRUPLE_CHUNK = 100_000


class TreeMetricIndex:
    """
    Constant-time LCA and distance queries on a fixed tree.

    ``depth`` counts edges from the root; ``root_distance`` is the
    weighted depth (equal to ``depth`` for unit edges).
    """

    __slots__ = (
        'tree',
        'euler_tour',
        'depth',
        'root_distance',
        'first_occurrence',
        'rmq',
    )

    def __init__(
        self,
        tree: RootedTree,
        euler_tour: np.ndarray,
        depth: np.ndarray,
        root_distance: tuple,
        first_occurrence: np.ndarray,
    ) -> None:
        self.tree = tree
        self.euler_tour = euler_tour
        self.depth = depth
        self.root_distance = root_distance
        self.first_occurrence = first_occurrence
        self.rmq = SparseTable(depth[euler_tour])

    def lca(self, a: int, b: int) -> int:
        """Deepest common ancestor of ``a`` and ``b``."""
        self.tree.check_vertex(a)
        self.tree.check_vertex(b)
        position = self.rmq.argmin(
            int(self.first_occurrence[a]),
            int(self.first_occurrence[b]),
        )
        return int(self.euler_tour[position])

    def dist(self, a: int, b: int):
        """Path length between ``a`` and ``b``."""
        meet = self.lca(a, b)
        rd = self.root_distance
        return rd[a] + rd[b] - 2 * rd[meet]

    def distances_from(self, a: int) -> np.ndarray:
        """Distances from ``a`` to every vertex, indexed by vertex id."""
        self.tree.check_vertex(a)
        n = self.tree.vertex_count
        starts = np.full(n, self.first_occurrence[a], dtype=np.int64)
        meets = self.euler_tour[self.rmq.argmin_many(starts, self.first_occurrence)]
        rd = self._root_distance_array()
        return rd[a] + rd - 2 * rd[meets]

    def distance_matrix(self) -> np.ndarray:
        return np.vstack([self.distances_from(a) for a in range(self.tree.vertex_count)])

    def _root_distance_array(self) -> np.ndarray:
        if all(isinstance(x, int) for x in self.root_distance):
            return np.asarray(self.root_distance, dtype=np.int64)
        return np.asarray(self.root_distance, dtype=object)


def build_index(
    tree: RootedTree,
    lengths: Mapping[int, Real] | None = None,
) -> TreeMetricIndex:
    """
    Preprocess ``tree`` for distance queries in O(n log n).

    Args:
        tree: The tree to index
        lengths: Optional positive length of the edge above each non-root
            vertex; unit lengths when omitted

    Returns:
        An immutable TreeMetricIndex
    """
    n = tree.vertex_count
    tour = [tree.root]
    first = [0] * n
    stack = [(tree.root, iter(tree.children[tree.root]))]
    while stack:
        child = next(stack[-1][1], None)
        if child is None:
            stack.pop()
            if stack:
                tour.append(stack[-1][0])
        else:
            first[child] = len(tour)
            tour.append(child)
            stack.append((child, iter(tree.children[child])))

    root_distance: list = [0] * n
    for parent, child in tree.edges():
        if lengths is None:
            step = 1
        else:
            step = lengths[child]
            if not step > 0:
                raise InvalidInput(f'edge above vertex {child} has non-positive length {step}')
        root_distance[child] = root_distance[parent] + step

    logger.debug('Metric index built: %d vertices, tour length %d', n, len(tour))
    return TreeMetricIndex(
        tree=tree,
        euler_tour=np.asarray(tour, dtype=np.int64),
        depth=np.asarray(tree.depth, dtype=np.int64),
        root_distance=tuple(root_distance),
        first_occurrence=np.asarray(first, dtype=np.int64),
    )


def lca(index: TreeMetricIndex, a: int, b: int) -> int:
    return index.lca(a, b)


def dist(index: TreeMetricIndex, a: int, b: int):
    return index.dist(a, b)


# ============================================================================
# Four-point condition
# ============================================================================

@dataclass(frozen=True)
class FourPointReport:
    """
    Outcome of a four-point scan.

    ``worst_violation`` is the largest gap between the largest and the
    second largest pair sum; ``witness`` is the lexicographically
    smallest quadruple attaining it (None with fewer than four points).
    """

    is_zero_hyperbolic: bool
    worst_violation: Real
    witness: tuple[int, int, int, int] | None
    quadruples_checked: int = 0
    sampled: bool = False


def _as_matrix(metric) -> np.ndarray:
    try:
        rows = [list(row) for row in metric]
    except TypeError as exc:
        raise NotAMetric('input is not a matrix') from exc
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise NotAMetric('matrix is not square')
    values = [x for row in rows for x in row]
    if any(isinstance(x, bool) or not isinstance(x, (Real, Decimal, np.number)) for x in values):
        raise NotAMetric('entries must be real numbers')
    if all(isinstance(x, (int, np.integer)) for x in values):
        return np.array(rows, dtype=np.int64).reshape(n, n)
    if all(isinstance(x, (int, float, np.integer, np.floating)) for x in values):
        return np.array(rows, dtype=np.float64).reshape(n, n)
    return np.array(rows, dtype=object).reshape(n, n)


def _first_pair(mask: np.ndarray) -> tuple[int, ...]:
    return tuple(int(i) for i in np.argwhere(mask)[0])


def validate_metric(metric, tolerance: Real = 0) -> np.ndarray:
    """
    Check symmetry, zero diagonal, nonnegativity and the triangle inequality.

    Integer matrices are checked exactly; ``tolerance`` only relaxes the
    triangle inequality for other number types.

    Returns:
        The metric as a numpy array
    """
    d = _as_matrix(metric)
    n = len(d)
    if d.dtype.kind == 'i':
        tolerance = 0
    elif d.dtype.kind == 'f':
        tolerance = float(tolerance)
        if not np.isfinite(d).all():
            raise NotAMetric('entries must be finite')

    if n and (d < 0).any():
        i, j = _first_pair(d < 0)
        raise NotAMetric(f'negative distance at ({i}, {j})')
    for i in range(n):
        if d[i, i] != 0:
            raise NotAMetric(f'nonzero diagonal at {i}')
    if n and (d != d.T).any():
        i, j = _first_pair(d != d.T)
        raise NotAMetric(f'asymmetric at ({i}, {j})')
    for k in range(n):
        broken = d > d[:, k, None] + d[None, k, :] + tolerance
        if broken.any():
            i, j = _first_pair(broken)
            raise NotAMetric(f'triangle inequality fails for ({i}, {k}, {j})')
    return d


def _exhaustive(n: int) -> Iterator[np.ndarray]:
    quads = combinations(range(n), 4)
    while True:
        chunk = list(islice(quads, QUADRUPLE_CHUNK))
        if not chunk:
            return
        yield np.array(chunk, dtype=np.int64)


def _sampled(n: int, samples: int, seed: int) -> Iterator[np.ndarray]:
    rng = seeded_rng(seed)
    draws = np.sort(rng.integers(0, n, size=(samples, 4)), axis=1)
    distinct = (np.diff(draws, axis=1) > 0).all(axis=1)
    # np.unique sorts rows lexicographically, which keeps the witness rule.
    quads = np.unique(draws[distinct], axis=0)
    for start in range(0, len(quads), QUADRUPLE_CHUNK):
        yield quads[start:start + QUADRUPLE_CHUNK]


def four_point_check(
    metric: Sequence[Sequence[Real]] | np.ndarray,
    tolerance: Real = 0,
    exhaustive_limit: int = 40,
    samples: int = 0,
    seed: int = 0,
) -> FourPointReport:
    """
    Test Gromov's four-point condition with delta = 0.

    Args:
        metric: Square distance matrix; validated first
        tolerance: Accepted violation for non-integer metrics
        exhaustive_limit: Largest point count scanned exhaustively
        samples: Quadruples drawn above the limit (0 = scan everything)
        seed: Seed of the quadruple sampler

    Returns:
        FourPointReport with the worst violation and its witness

    Raises:
        NotAMetric: if the matrix fails validation
    """
    d = validate_metric(metric, tolerance)
    n = len(d)
    if d.dtype.kind == 'i':
        tolerance = 0
    elif d.dtype.kind == 'f':
        tolerance = float(tolerance)
    if n < 4:
        return FourPointReport(True, 0, None)

    sampled = n > exhaustive_limit and samples > 0
    if sampled:
        logger.warning(
            'Four-point scan sampled: %d points above limit %d, %d draws',
            n, exhaustive_limit, samples,
        )
        batches = _sampled(n, samples, seed)
    else:
        batches = _exhaustive(n)

    worst = None
    witness = None
    checked = 0
    for quads in batches:
        x, y, z, w = quads.T
        s1 = d[x, y] + d[z, w]
        s2 = d[x, z] + d[y, w]
        s3 = d[x, w] + d[y, z]
        largest = np.maximum(np.maximum(s1, s2), s3)
        smallest = np.minimum(np.minimum(s1, s2), s3)
        excess = largest - (s1 + s2 + s3 - largest - smallest)
        i = int(np.argmax(excess))
        if worst is None or excess[i] > worst:
            worst = excess[i]
            witness = tuple(int(v) for v in quads[i])
        checked += len(quads)

    if worst is None:
        worst = 0
    elif isinstance(worst, np.generic):
        worst = worst.item()
    report = FourPointReport(
        is_zero_hyperbolic=worst <= tolerance,
        worst_violation=worst,
        witness=witness,
        quadruples_checked=checked,
        sampled=sampled,
    )
    logger.info(
        'Four-point scan: %d quadruples, worst violation %s',
        checked, report.worst_violation,
    )
    return report


def graph_metric(
    vertex_count: int,
    weighted_edges: Iterable[tuple[int, int, Real]],
) -> list[list[Real]]:
    """
    Shortest-path metric of a connected graph with positive edge lengths.

    Parallel edges keep the shortest length.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(vertex_count))
    for u, v, length in weighted_edges:
        for w in (u, v):
            if not 0 <= w < vertex_count:
                raise InvalidInput(f'vertex {w} is not in 0..{vertex_count - 1}')
        if not length > 0:
            raise InvalidInput(f'edge {u}-{v} has non-positive length {length}')
        if graph.has_edge(u, v) and graph[u][v]['weight'] <= length:
            continue
        graph.add_edge(u, v, weight=length)
    if vertex_count and not nx.is_connected(graph):
        raise DisconnectedGraph(nx.number_connected_components(graph))

    lengths = dict(nx.all_pairs_dijkstra_path_length(graph, weight='weight'))
    return [[lengths[u][v] for v in range(vertex_count)] for u in range(vertex_count)]
