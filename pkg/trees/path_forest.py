"""
Paths from a common origin under the separation metric.

Paths are finite token sequences stored in a trie. Two paths agree up
to the length of their longest common prefix and
``d(p, q) = len(p) + len(q) - 2 * separation(p, q)``, which is the
unit-edge tree distance between their trie vertices.
"""

import logging
from collections.abc import Callable, Iterable

from .exceptions import BadPathId
from .tree_core import RootedTree

logger = logging.getLogger(__name__)


class PathForest:
    """
    Prefix-closed family of token paths.

    Vertex 0 of the trie is the origin; every vertex is the endpoint of
    the prefix spelled by the tokens on its root path. Path ids are
    handed out in order of first insertion.
    """

    def __init__(self) -> None:
        self._edges: list[dict[str, int]] = [{}]
        self._parent: list[int] = [0]
        self._token: list[str] = ['']
        self._paths: list[tuple[str, ...]] = []
        self._vertex_of: list[int] = []
        self._ids: dict[tuple[str, ...], int] = {}

    def __len__(self) -> int:
        return len(self._paths)

    @property
    def origin(self) -> int:
        return 0

    @property
    def vertex_count(self) -> int:
        return len(self._parent)

    @property
    def paths(self) -> tuple[tuple[str, ...], ...]:
        return tuple(self._paths)

    def insert(self, tokens: Iterable[str]) -> int:
        key = tuple(str(token) for token in tokens)
        if key in self._ids:
            return self._ids[key]

        vertex = self.origin
        for token in key:
            step = self._edges[vertex].get(token)
            if step is None:
                step = len(self._parent)
                self._edges[vertex][token] = step
                self._edges.append({})
                self._parent.append(vertex)
                self._token.append(token)
            vertex = step

        path_id = len(self._paths)
        self._paths.append(key)
        self._vertex_of.append(vertex)
        self._ids[key] = path_id
        return path_id

    def check_path(self, path_id) -> int:
        valid = isinstance(path_id, int) and not isinstance(path_id, bool)
        if not valid or not 0 <= path_id < len(self._paths):
            raise BadPathId(path_id, len(self._paths))
        return path_id

    def tokens(self, path_id: int) -> tuple[str, ...]:
        return self._paths[self.check_path(path_id)]

    def length(self, path_id: int) -> int:
        """``xi``: number of tokens of the path."""
        return len(self.tokens(path_id))

    def vertex(self, path_id: int) -> int:
        return self._vertex_of[self.check_path(path_id)]

    def separation(self, p: int, q: int) -> int:
        first = self.tokens(p)
        second = self.tokens(q)
        common = 0
        for a, b in zip(first, second):
            if a != b:
                break
            common += 1
        return common

    def distance(self, p: int, q: int) -> int:
        return self.length(p) + self.length(q) - 2 * self.separation(p, q)

    def to_tree(self) -> tuple[RootedTree, tuple[int, ...]]:
        """
        Snapshot of the trie as a unit-edge RootedTree.

        Vertices keep their trie ids, children are in insertion order and
        each vertex is labelled with the token on the edge above it (the
        origin with the empty string).

        Returns:
            The tree and the trie vertex of every path id
        """
        children = tuple(tuple(edges.values()) for edges in self._edges)
        tree = RootedTree(
            root=self.origin,
            parent=tuple(self._parent),
            children=children,
            labels=tuple(self._token),
        )
        logger.debug('Path forest snapshot: %d paths, %d vertices', len(self), len(children))
        return tree, tuple(self._vertex_of)

    def is_prefix(self, p: int, q: int) -> bool:
        """True when path ``p`` is an initial segment of path ``q``."""
        return self.separation(p, q) == self.length(p)


def insert_path(forest: PathForest, tokens: Iterable[str]) -> int:
    return forest.insert(tokens)


def separation(forest: PathForest, p: int, q: int) -> int:
    """Length of the longest common prefix of two paths."""
    return forest.separation(p, q)


def path_distance(forest: PathForest, p: int, q: int) -> int:
    """``xi(p) + xi(q) - 2 * separation(p, q)``."""
    return forest.distance(p, q)


def to_tree(forest: PathForest) -> tuple[RootedTree, tuple[int, ...]]:
    return forest.to_tree()


def prefix_order(forest: PathForest) -> tuple[list[int], Callable[[int, int], bool]]:
    """
    Path ids and the initial-segment order on them.

    Fed to ``from_partial_order`` this rebuilds the tree of the stored
    paths when the family is prefix closed and contains the origin.
    """
    return list(range(len(forest))), forest.is_prefix
