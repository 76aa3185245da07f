"""
Contour trees of scalar fields on finite connected graphs.

For a vertex ``x`` and a level ``lam <= h(x)``, the contour
``C(x, lam)`` is the connected component of ``x`` in the subgraph
induced by ``{y : h(y) >= lam}``. ``lambda(y, z)`` is the highest level
at which ``y`` and ``z`` share a contour, and
``d(x, y) = h(x) + h(y) - 2 lambda(x, y)`` is a pseudo-metric whose
quotient is a tree with weighted edges, the contour tree.

All contours are built at once by a descending sweep over the distinct
values of ``h`` with a union-find forest. Every component touched at a
level becomes one node of the merge dendrogram; the dendrogram is the
quotient tree.
"""

import logging
from collections import defaultdict, deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from decimal import Decimal
from functools import cached_property
from numbers import Real

from .excursion import Excursion
from .exceptions import (
    BadVertex,
    DisconnectedGraph,
    InvalidInput,
    LevelAboveX,
    LevelNotRealized,
    NegativeValue,
)
from .metric_index import TreeMetricIndex, build_index
from .tree_core import RootedTree
from .union_find import DisjointSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScalarField:
    """
    Undirected graph on ``0..n-1`` with a nonnegative value per vertex.

    Connectivity is checked when the merge structure is built.
    """

    values: tuple[Real, ...]
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        n = len(self.values)
        if n == 0:
            raise InvalidInput('a scalar field needs at least one vertex')
        for v, value in enumerate(self.values):
            if isinstance(value, bool) or not isinstance(value, (Real, Decimal)):
                raise InvalidInput(f'vertex {v} has a non-numeric value {value!r}')
            if value < 0:
                raise NegativeValue(v, value)
        for u, v in self.edges:
            for w in (u, v):
                if not 0 <= w < n:
                    raise BadVertex(w, n)

    @classmethod
    def build(
        cls,
        values: Sequence[Real],
        edges: Iterable[tuple[int, int]] = (),
    ) -> 'ScalarField':
        return cls(tuple(values), tuple((int(u), int(v)) for u, v in edges))

    @property
    def vertex_count(self) -> int:
        return len(self.values)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        neighbours: list[list[int]] = [[] for _ in self.values]
        for u, v in self.edges:
            if u != v:
                neighbours[u].append(v)
                neighbours[v].append(u)
        return tuple(tuple(sorted(set(adj))) for adj in neighbours)

    @cached_property
    def minima(self) -> frozenset[int]:
        low = min(self.values)
        return frozenset(v for v, value in enumerate(self.values) if value == low)

    def check_vertex(self, v) -> int:
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < len(self.values):
            raise BadVertex(v, len(self.values))
        return v


@dataclass(frozen=True)
class MergeNode:
    """One contour class: a component of ``{h >= level}`` touched at ``level``."""

    node_id: int
    level: Real
    children: tuple[int, ...]
    members: tuple[int, ...]


@dataclass(frozen=True)
class MergeStructure:
    """
    Dendrogram of super-level components.

    ``levels`` holds the distinct values of ``h`` in descending order.
    ``nodes[i]`` is the component created or enlarged at its level;
    ``class_of[x]`` is the node created at level ``h(x)`` that contains
    ``x``. Node 0 is the root: the whole vertex set at the minimum level.
    """

    scalar_field: ScalarField
    levels: tuple[Real, ...]
    nodes: tuple[MergeNode, ...]
    class_of: tuple[int, ...]
    tree: RootedTree = field(repr=False)
    index: TreeMetricIndex = field(repr=False, compare=False)

    def level_of(self, node: int) -> Real:
        return self.nodes[node].level

    def level(self, y: int, z: int) -> Real:
        """``lambda(y, z)``: merge level of the classes of ``y`` and ``z``."""
        self.scalar_field.check_vertex(y)
        self.scalar_field.check_vertex(z)
        meet = self.index.lca(self.class_of[y], self.class_of[z])
        return self.nodes[meet].level

    def distance(self, x: int, y: int) -> Real:
        h = self.scalar_field.values
        return h[x] + h[y] - 2 * self.level(x, y)

    def component_node(self, x: int, lam: Real) -> int:
        """Node of the dendrogram whose vertex set is ``C(x, lam)``."""
        self.scalar_field.check_vertex(x)
        if lam > self.scalar_field.values[x]:
            raise LevelAboveX(lam, self.scalar_field.values[x])
        node = self.class_of[x]
        parent = self.tree.parent
        while node != self.tree.root and self.nodes[parent[node]].level >= lam:
            node = parent[node]
        return node

    def component(self, x: int, lam: Real) -> frozenset[int]:
        """``C(x, lam)`` read from the dendrogram."""
        return self.subtree_members(self.component_node(x, lam))

    def subtree_members(self, node: int) -> frozenset[int]:
        members: set[int] = set()
        stack = [node]
        while stack:
            current = stack.pop()
            members.update(self.nodes[current].members)
            stack.extend(self.tree.children[current])
        return frozenset(members)

    def components_at(self, lam: Real) -> list[frozenset[int]]:
        """Partition of ``{h >= lam}`` into contours, ordered by smallest vertex."""
        h = self.scalar_field.values
        seen: set[int] = set()
        parts = []
        for x in range(self.scalar_field.vertex_count):
            if h[x] >= lam and x not in seen:
                part = self.component(x, lam)
                seen.update(part)
                parts.append(part)
        return parts


@dataclass(frozen=True)
class QuotientTree:
    """
    Contour tree with heights and weighted edges.

    ``edge_length[(p, c)] = height_of[c] - height_of[p] > 0``; the root is
    the class of the minima.
    """

    tree: RootedTree
    class_of: tuple[int, ...]
    height_of: tuple[Real, ...]
    edge_length: Mapping[tuple[int, int], Real]
    members: tuple[tuple[int, ...], ...] = ()

    @cached_property
    def index(self) -> TreeMetricIndex:
        lengths = {c: length for (_, c), length in self.edge_length.items()}
        return build_index(self.tree, lengths=lengths)

    def distance(self, a: int, b: int) -> Real:
        """Weighted path length between two classes."""
        return self.index.dist(a, b)

    def vertex_distance(self, x: int, y: int) -> Real:
        return self.distance(self.class_of[x], self.class_of[y])


# ============================================================================
# Operations
# ============================================================================

def component_at(scalar_field: ScalarField, x: int, lam: Real) -> frozenset[int]:
    """
    ``C(x, lam)`` by flood fill; the brute-force reference for the sweep.

    Raises:
        LevelAboveX: if ``lam > h(x)``
    """
    scalar_field.check_vertex(x)
    h = scalar_field.values
    if lam > h[x]:
        raise LevelAboveX(lam, h[x])
    seen = {x}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        for v in scalar_field.adjacency[u]:
            if v not in seen and h[v] >= lam:
                seen.add(v)
                queue.append(v)
    return frozenset(seen)


def build_merge(scalar_field: ScalarField) -> MergeStructure:
    """
    Sweep the distinct values of ``h`` from the top down.

    At each level the vertices with that value are activated and joined
    to their active neighbours; every component that received a vertex
    becomes a dendrogram node whose children are the nodes of the
    components it absorbed.

    Raises:
        DisconnectedGraph: if the graph is not connected
    """
    h = scalar_field.values
    n = scalar_field.vertex_count
    by_value: dict[Real, list[int]] = defaultdict(list)
    for v in range(n):
        by_value[h[v]].append(v)
    levels = tuple(sorted(by_value, reverse=True))

    forest = DisjointSet(n)
    active = [False] * n
    node_at_root: dict[int, int] = {}
    # (level, children, members) in creation order; ids reversed at the end
    created: list[tuple[Real, list[int], list[int]]] = []
    created_class = [0] * n

    for lam in levels:
        fresh = by_value[lam]
        for v in fresh:
            active[v] = True
        absorbed: list[tuple[int, int]] = []
        for v in fresh:
            for u in scalar_field.adjacency[v]:
                if not active[u]:
                    continue
                root_u = forest.find(u)
                if root_u in node_at_root:
                    absorbed.append((node_at_root.pop(root_u), u))
                forest.union(u, v)

        groups: dict[int, list[int]] = defaultdict(list)
        for v in fresh:
            groups[forest.find(v)].append(v)
        children: dict[int, list[int]] = defaultdict(list)
        for node, u in absorbed:
            children[forest.find(u)].append(node)

        for root, members in sorted(groups.items(), key=lambda item: item[1][0]):
            node = len(created)
            created.append((lam, sorted(children[root]), members))
            node_at_root[root] = node
            for v in members:
                created_class[v] = node

    if forest.set_count() != 1:
        raise DisconnectedGraph(forest.set_count())

    # Renumber so the root (created last) is node 0.
    last = len(created) - 1
    nodes = []
    parent = [0] * len(created)
    for new_id in range(len(created)):
        lam, kids, members = created[last - new_id]
        kid_ids = tuple(sorted(last - k for k in kids))
        for k in kid_ids:
            parent[k] = new_id
        nodes.append(MergeNode(new_id, lam, kid_ids, tuple(members)))

    tree = RootedTree(
        root=0,
        parent=tuple(parent),
        children=tuple(node.children for node in nodes),
    )
    merge = MergeStructure(
        scalar_field=scalar_field,
        levels=levels,
        nodes=tuple(nodes),
        class_of=tuple(last - c for c in created_class),
        tree=tree,
        index=build_index(tree),
    )
    logger.info(
        'Merge structure built: %d vertices, %d levels, %d classes',
        n, len(levels), len(nodes),
    )
    return merge


def merge_level(merge: MergeStructure, y: int, z: int) -> Real:
    """``lambda(y, z)``; ``lambda(x, x) = h(x)``."""
    return merge.level(y, z)


def contour_distance(merge: MergeStructure, x: int, y: int) -> Real:
    """``d(x, y) = h(x) + h(y) - 2 lambda(x, y)``."""
    return merge.distance(x, y)


def quotient_tree(merge: MergeStructure) -> QuotientTree:
    """
    Identify ``x ~ y`` when ``h(x) = h(y)`` and both lie in one component
    of ``{h >= h(x)}``; join each class to the nearest lower class on its
    dendrogram branch, with the level difference as edge length.
    """
    heights = tuple(node.level for node in merge.nodes)
    edge_length = {
        (p, c): heights[c] - heights[p]
        for p, c in merge.tree.edges()
    }
    return QuotientTree(
        tree=merge.tree,
        class_of=merge.class_of,
        height_of=heights,
        edge_length=edge_length,
        members=tuple(node.members for node in merge.nodes),
    )


def level_representative(merge: MergeStructure, x: int, lam: Real) -> int:
    """
    Ancestor class of ``class_of(x)`` sitting exactly at level ``lam``.

    Raises:
        LevelAboveX: if ``lam > h(x)``
        LevelNotRealized: if no class on the root path has level ``lam``;
            the error carries the bracketing classes
    """
    merge.scalar_field.check_vertex(x)
    if lam > merge.scalar_field.values[x]:
        raise LevelAboveX(lam, merge.scalar_field.values[x])

    above = None
    node = merge.class_of[x]
    while True:
        level = merge.level_of(node)
        if level == lam:
            return node
        if level < lam:
            raise LevelNotRealized(lam, below=(node, level), above=above)
        if node == merge.tree.root:
            raise LevelNotRealized(lam, below=None, above=(node, level))
        above = (node, level)
        node = merge.tree.parent[node]


# ============================================================================
# Fields from trees and excursions
# ============================================================================

def field_from_tree(
    tree: RootedTree,
    lengths: Mapping[int, Real] | None = None,
) -> ScalarField:
    """
    The tree as a graph with ``h`` = distance from the root.

    Its contour tree is the tree itself; ``lengths`` gives the length of
    the edge above each non-root vertex (unit when omitted).
    """
    index = build_index(tree, lengths=lengths)
    return ScalarField.build(index.root_distance, tree.edges())


def field_from_excursion(exc: Excursion) -> ScalarField:
    """The excursion as a height function on the path ``0 - 1 - ... - 2m``."""
    length = len(exc.heights)
    return ScalarField.build(exc.heights, ((t, t + 1) for t in range(length - 1)))
