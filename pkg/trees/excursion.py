"""
Excursion codec for rooted trees.

A tree with ``m`` edges is walked depth first, oldest child first; the
distance from the root after each step gives a lattice path
``h(0..2m)`` that starts and ends at 0, never goes negative and moves
by one unit per step. The path determines the ordered tree, and
``h(m) + h(n) - 2 min h[m..n]`` is the tree distance between the
vertices visited at times ``m`` and ``n``.
"""

import logging
import operator
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .exceptions import (
    BadEndpoint,
    BadStep,
    FormatError,
    IndexOutOfRange,
    InvalidInput,
    NegativeHeight,
)
from .numbers import seeded_rng
from .range_min import SparseTable
from .tree_core import RootedTree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Excursion:
    """Validated height sequence ``h(0..2m)``."""

    heights: tuple[int, ...]

    def __post_init__(self) -> None:
        h = self.heights
        if not h or h[0] != 0:
            raise BadEndpoint()
        for k in range(1, len(h)):
            if abs(h[k] - h[k - 1]) != 1:
                raise BadStep(k - 1)
            if h[k] < 0:
                raise NegativeHeight(k)
        if h[-1] != 0:
            raise BadEndpoint()

    def __len__(self) -> int:
        return len(self.heights)

    @property
    def edge_count(self) -> int:
        return (len(self.heights) - 1) // 2

    def check_time(self, t) -> int:
        if isinstance(t, bool) or not isinstance(t, int) or not 0 <= t < len(self.heights):
            raise IndexOutOfRange(t, len(self.heights))
        return t

    @cached_property
    def _range_min(self) -> SparseTable:
        return SparseTable(self.heights)

    def distance(self, m: int, n: int) -> int:
        self.check_time(m)
        self.check_time(n)
        return self.heights[m] + self.heights[n] - 2 * self._range_min.min(m, n)


def validate_excursion(seq: Iterable[int]) -> Excursion:
    """
    Check that ``seq`` is an excursion.

    Raises:
        BadEndpoint: empty, or not starting and ending at 0
        BadStep: a step of size other than one (index of the step's start)
        NegativeHeight: a height below zero
    """
    try:
        heights = tuple(operator.index(x) for x in seq)
    except TypeError as exc:
        raise FormatError('excursion heights must be integers') from exc
    return Excursion(heights)


def encode(tree: RootedTree) -> Excursion:
    """
    Code ``tree`` by its depth-first walk.

    At the root: stop once every child has been visited. Elsewhere: move
    to the parent once the children are exhausted. Otherwise descend to
    the oldest unvisited child. Each edge is crossed exactly twice.
    """
    heights = [0]
    next_child = [0] * tree.vertex_count
    current = tree.root
    while True:
        kids = tree.children[current]
        position = next_child[current]
        if position < len(kids):
            next_child[current] = position + 1
            current = kids[position]
            heights.append(heights[-1] + 1)
        elif current == tree.root:
            break
        else:
            current = tree.parent[current]
            heights.append(heights[-1] - 1)
    return Excursion(tuple(heights))


def _walk(exc: Excursion) -> tuple[RootedTree, tuple[int, ...]]:
    # New vertices get ids in order of first visit, so child order is
    # first-visit order and the walk reproduces ``exc``.
    h = exc.heights
    parent = [0]
    children: list[list[int]] = [[]]
    stack = [0]
    visited_at = [0]
    for k in range(1, len(h)):
        if h[k] > h[k - 1]:
            v = len(parent)
            parent.append(stack[-1])
            children[stack[-1]].append(v)
            children.append([])
            stack.append(v)
        else:
            stack.pop()
        visited_at.append(stack[-1])
    tree = RootedTree(
        root=0,
        parent=tuple(parent),
        children=tuple(tuple(kids) for kids in children),
    )
    return tree, tuple(visited_at)


def decode(exc: Excursion) -> RootedTree:
    """
    Recover the ordered tree coded by ``exc``.

    Vertices are the classes of times at excursion distance 0; the root
    is the class of time 0 and children are ordered by first visit.
    """
    return _walk(exc)[0]


def visits(exc: Excursion) -> tuple[int, ...]:
    """Vertex of ``decode(exc)`` visited at each time index."""
    return _walk(exc)[1]


def excursion_distance(exc: Excursion, m: int, n: int) -> int:
    """``h(m) + h(n) - 2 min h`` over the closed interval between m and n."""
    return exc.distance(m, n)


def root_degree(exc: Excursion) -> int:
    """Number of returns to zero, i.e. the number of children of the root."""
    return sum(1 for height in exc.heights[1:] if height == 0)


def random_excursion(edge_count: int, seed: int) -> Excursion:
    """
    Uniform random excursion with ``edge_count`` edges.

    A uniformly shuffled sequence of ``m`` up-steps and ``m + 1``
    down-steps has exactly one rotation whose partial sums stay
    nonnegative until the final step; dropping that final down-step
    leaves a uniform Dyck path.
    """
    if isinstance(edge_count, bool) or not isinstance(edge_count, int) or edge_count < 1:
        raise InvalidInput(f'edge count must be a positive integer, got {edge_count!r}')

    rng = seeded_rng(seed)
    steps = np.array([1] * edge_count + [-1] * (edge_count + 1), dtype=np.int64)
    steps = rng.permutation(steps)
    start = (int(np.argmin(np.cumsum(steps))) + 1) % len(steps)
    rotated = np.roll(steps, -start)[:-1]
    heights = np.concatenate(([0], np.cumsum(rotated)))

    logger.debug('Random excursion drawn: %d edges, seed %s', edge_count, seed)
    return Excursion(tuple(int(x) for x in heights))


def dyck_paths(edge_count: int) -> Iterator[Excursion]:
    """Every excursion with ``edge_count`` edges, up-steps first."""
    length = 2 * edge_count + 1

    def extend(heights: list[int]) -> Iterator[tuple[int, ...]]:
        if len(heights) == length:
            yield tuple(heights)
            return
        remaining = length - len(heights)
        top = heights[-1]
        if top + 1 <= remaining - 1:
            heights.append(top + 1)
            yield from extend(heights)
            heights.pop()
        if top > 0:
            heights.append(top - 1)
            yield from extend(heights)
            heights.pop()

    for heights in extend([0]):
        yield Excursion(heights)
