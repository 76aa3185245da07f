"""
Rooted trees: data model, validation, ancestor order and Newick output.

Vertices are dense integer ids ``0..n-1``. Child order is significant:
it is the "oldest child first" order the excursion codec walks in.
"""

import logging
from collections import deque
from collections.abc import Callable, Hashable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations
from numbers import Real

from .exceptions import (
    BadRoot,
    BadVertex,
    CycleDetected,
    Disconnected,
    DownSetNotChain,
    InvalidInput,
    NoLeastElement,
)
from .numbers import format_number
from .union_find import DisjointSet

logger = logging.getLogger(__name__)

_NEWICK_SPECIAL = frozenset(" \t\n()[]':;,")


class AncestorRelation(str, Enum):
    """Position of ``a`` relative to ``b`` in the ancestor order."""
    ANCESTOR = 'ancestor'
    DESCENDANT = 'descendant'
    EQUAL = 'equal'
    INCOMPARABLE = 'incomparable'


@dataclass(frozen=True)
class RootedTree:
    """
    Finite rooted tree with ordered children.

    ``parent[root] == root``; ``children[v]`` lists the children of ``v``
    oldest first. ``labels`` is optional decoration; without it a vertex
    is labelled by its id.
    """

    root: int
    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        n = len(self.parent)
        if n == 0:
            raise InvalidInput('a tree has at least one vertex')
        if len(self.children) != n:
            raise InvalidInput('parent and children disagree on the vertex count')
        if self.labels is not None and len(self.labels) != n:
            raise InvalidInput('one label per vertex is required')
        if not 0 <= self.root < n:
            raise BadRoot(self.root, n)
        if self.parent[self.root] != self.root:
            raise InvalidInput(f'root {self.root} must be its own parent')

        seen_children = 0
        for p, kids in enumerate(self.children):
            if len(set(kids)) != len(kids):
                raise InvalidInput(f'duplicate child under vertex {p}')
            for c in kids:
                if not 0 <= c < n or c == self.root or self.parent[c] != p:
                    raise InvalidInput(f'child {c} of {p} disagrees with its parent link')
            seen_children += len(kids)
        for v, p in enumerate(self.parent):
            if not 0 <= p < n:
                raise BadVertex(p, n)
            if v != self.root and p == v:
                raise Disconnected([v])
        if seen_children != n - 1:
            raise InvalidInput('every non-root vertex must appear as a child exactly once')

        reached = self.preorder()
        if len(reached) != n:
            # Parent links of an unreachable vertex can only loop.
            stray = min(set(range(n)).difference(reached))
            raise CycleDetected((self.parent[stray], stray))

    # =========================
    # Construction helpers
    # =========================
    @classmethod
    def from_parents(
        cls,
        parent: Sequence[int],
        root: int,
        labels: Sequence[str] | None = None,
    ) -> 'RootedTree':
        """Build a tree from parent links, children in ascending id order."""
        n = len(parent)
        children: list[list[int]] = [[] for _ in range(n)]
        for v, p in enumerate(parent):
            if v != root and 0 <= p < n:
                children[p].append(v)
        return cls(
            root=root,
            parent=tuple(parent),
            children=tuple(tuple(kids) for kids in children),
            labels=tuple(labels) if labels is not None else None,
        )

    # =========================
    # Queries
    # =========================
    @property
    def vertex_count(self) -> int:
        return len(self.parent)

    @property
    def edge_count(self) -> int:
        return len(self.parent) - 1

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def check_vertex(self, v) -> int:
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < self.vertex_count:
            raise BadVertex(v, self.vertex_count)
        return v

    def preorder(self) -> list[int]:
        """Vertices in depth-first order, children visited oldest first."""
        order = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(self.children[v]))
        return order

    def edges(self) -> Iterator[tuple[int, int]]:
        """Parent-child pairs in preorder."""
        for v in self.preorder():
            for c in self.children[v]:
                yield v, c

    @cached_property
    def depth(self) -> tuple[int, ...]:
        depth = [0] * self.vertex_count
        for v in self.preorder():
            for c in self.children[v]:
                depth[c] = depth[v] + 1
        return tuple(depth)

    def ancestors(self, v: int) -> list[int]:
        """Path from ``v`` up to the root, both included."""
        self.check_vertex(v)
        path = [v]
        while v != self.root:
            v = self.parent[v]
            path.append(v)
        return path


# ============================================================================
# Operations
# ============================================================================

def build_tree(
    edges: Iterable[tuple[int, int]],
    root: int,
    child_order: Callable[[int], object] | None = None,
    *,
    vertex_count: int | None = None,
    labels: Sequence[str] | None = None,
) -> RootedTree:
    """
    Orient an undirected edge list away from ``root``.

    Args:
        edges: Vertex pairs over ids ``0..n-1``
        root: Root vertex
        child_order: Sort key for siblings (default: ascending id)
        vertex_count: ``n``; inferred from the largest id when omitted

    Returns:
        The validated RootedTree
    """
    edge_list = [(int(u), int(v)) for u, v in edges]
    if vertex_count is None:
        vertex_count = 1 + max((max(e) for e in edge_list), default=0)
    n = vertex_count
    if isinstance(root, bool) or not isinstance(root, int) or not 0 <= root < n:
        raise BadRoot(root, n)

    components = DisjointSet(n)
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for u, v in edge_list:
        for w in (u, v):
            if not 0 <= w < n:
                raise BadVertex(w, n)
        if not components.union(u, v):
            raise CycleDetected((u, v))
        adjacency[u].append(v)
        adjacency[v].append(u)

    parent = [-1] * n
    parent[root] = root
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if parent[v] == -1:
                parent[v] = u
                queue.append(v)
    unreachable = [v for v in range(n) if parent[v] == -1]
    if unreachable:
        raise Disconnected(unreachable)

    key = child_order if child_order is not None else (lambda v: v)
    children: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        if v != root:
            children[parent[v]].append(v)

    tree = RootedTree(
        root=root,
        parent=tuple(parent),
        children=tuple(tuple(sorted(kids, key=key)) for kids in children),
        labels=tuple(labels) if labels is not None else None,
    )
    logger.debug('Tree built: %d vertices, root %d', n, root)
    return tree


def compare(tree: RootedTree, a: int, b: int) -> AncestorRelation:
    """Compare two vertices in the ancestor order (``a`` relative to ``b``)."""
    tree.check_vertex(a)
    tree.check_vertex(b)
    if a == b:
        return AncestorRelation.EQUAL

    depth = tree.depth
    if depth[a] == depth[b]:
        return AncestorRelation.INCOMPARABLE
    upper, lower = (a, b) if depth[a] < depth[b] else (b, a)
    while depth[lower] > depth[upper]:
        lower = tree.parent[lower]
    if lower != upper:
        return AncestorRelation.INCOMPARABLE
    return AncestorRelation.ANCESTOR if upper == a else AncestorRelation.DESCENDANT


def from_partial_order(
    elements: Iterable[Hashable],
    leq: Callable[[Hashable, Hashable], bool],
) -> RootedTree:
    """
    Rebuild the rooted tree whose ancestor order is ``leq``.

    Vertex ids follow the order of ``elements``; labels are ``str(element)``.
    The parent of ``b`` is the largest element strictly below it.
    """
    items = list(elements)
    index = {item: i for i, item in enumerate(items)}
    if len(index) != len(items):
        raise InvalidInput('elements must be distinct')

    least = next((x for x in items if all(leq(x, y) for y in items)), None)
    if least is None:
        raise NoLeastElement()

    parent = [0] * len(items)
    for b in items:
        below = [a for a in items if a != b and leq(a, b)]
        for a1, a2 in combinations(below, 2):
            if not leq(a1, a2) and not leq(a2, a1):
                raise DownSetNotChain(a1, a2, b)
        if b == least:
            parent[index[b]] = index[b]
            continue
        top = below[0]
        for a in below[1:]:
            if leq(top, a):
                top = a
        parent[index[b]] = index[top]

    return RootedTree.from_parents(parent, index[least], labels=[str(x) for x in items])


def is_isomorphic(first: RootedTree, second: RootedTree, labels: bool = False) -> bool:
    """Unordered isomorphism, optionally respecting labels."""
    return canonical_newick(first, labels=labels) == canonical_newick(second, labels=labels)


# ============================================================================
# Newick
# ============================================================================

def quote_label(label: str) -> str:
    if any(ch in _NEWICK_SPECIAL for ch in label):
        return "'" + label.replace("'", "''") + "'"
    return label


def _vertex_text(
    tree: RootedTree,
    v: int,
    labels: bool,
    lengths: Mapping[int, Real] | None,
    comments: Mapping[int, Mapping[str, object]] | None,
) -> str:
    text = quote_label(tree.label(v)) if labels else ''
    if comments and v in comments:
        attrs = ','.join(f'{key}={_attr(value)}' for key, value in comments[v].items())
        text += f'[&{attrs}]'
    if lengths and v in lengths:
        text += ':' + format_number(lengths[v])
    return text


def _attr(value) -> str:
    return value if isinstance(value, str) else format_number(value)


def _newick(tree, labels, lengths, comments, canonical: bool) -> str:
    text: list[str] = [''] * tree.vertex_count
    smallest: list[str] = [''] * tree.vertex_count
    for v in reversed(tree.preorder()):
        kids = list(tree.children[v])
        own = tree.label(v) if labels else ''
        if canonical:
            kids.sort(key=lambda c: (text[c], smallest[c]))
            smallest[v] = min([own, *(smallest[c] for c in kids)])
        body = '(' + ','.join(text[c] for c in kids) + ')' if kids else ''
        text[v] = body + _vertex_text(tree, v, labels, lengths, comments)
    return text[tree.root] + ';'


def canonical_newick(
    tree: RootedTree,
    labels: bool = True,
    lengths: Mapping[int, Real] | None = None,
    comments: Mapping[int, Mapping[str, object]] | None = None,
) -> str:
    """
    Serialize ``tree`` as Newick with siblings in canonical order.

    Siblings are sorted by their serialized subtree, ties broken by the
    smallest label inside the subtree, so trees that differ only in
    child order give identical strings. With ``labels=False`` only the
    shape is written.

    ``lengths`` maps a vertex to the length of the edge above it;
    ``comments`` maps a vertex to attributes written as ``[&key=value]``.
    """
    return _newick(tree, labels, lengths, comments, canonical=True)


def ordered_newick(
    tree: RootedTree,
    labels: bool = True,
    lengths: Mapping[int, Real] | None = None,
    comments: Mapping[int, Mapping[str, object]] | None = None,
) -> str:
    """Serialize ``tree`` as Newick keeping its own child order."""
    return _newick(tree, labels, lengths, comments, canonical=False)
