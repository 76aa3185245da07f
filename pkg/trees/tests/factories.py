"""Random instances and brute-force references shared by the tests."""

import networkx as nx
import numpy as np
from hypothesis import strategies as st

from trees.contour import ScalarField
from trees.excursion import decode, dyck_paths
from trees.tree_core import RootedTree


def random_tree(rng: np.random.Generator, n: int) -> RootedTree:
    """Random recursive tree on ``n`` vertices with shuffled child order."""
    parent = [0] + [int(rng.integers(0, v)) for v in range(1, n)]
    children: list[list[int]] = [[] for _ in range(n)]
    for v in range(1, n):
        children[parent[v]].append(v)
    for kids in children:
        rng.shuffle(kids)
    return RootedTree(
        root=0,
        parent=tuple(parent),
        children=tuple(tuple(kids) for kids in children),
    )


def random_connected_edges(rng: np.random.Generator, n: int, extra: int) -> list[tuple[int, int]]:
    """A random spanning tree plus ``extra`` random edges (loops skipped)."""
    edges = [(int(rng.integers(0, v)), v) for v in range(1, n)]
    for _ in range(extra):
        u, v = (int(x) for x in rng.integers(0, n, size=2))
        if u != v:
            edges.append((u, v))
    return edges


def random_field(rng: np.random.Generator, n: int, top: int = 20) -> ScalarField:
    values = [int(x) for x in rng.integers(0, top + 1, size=n)]
    return ScalarField.build(values, random_connected_edges(rng, n, extra=n // 2))


def maximin_levels(scalar_field: ScalarField) -> np.ndarray:
    """Best over all paths of the smallest value on the path (Floyd-Warshall)."""
    h = np.asarray(scalar_field.values, dtype=np.int64)
    n = len(h)
    best = np.full((n, n), -1, dtype=np.int64)
    best[np.arange(n), np.arange(n)] = h
    for u, v in scalar_field.edges:
        if u != v:
            best[u, v] = best[v, u] = max(best[u, v], min(h[u], h[v]))
    for k in range(n):
        best = np.maximum(best, np.minimum(best[:, k, None], best[None, k, :]))
    return best


def bfs_distances(tree: RootedTree) -> dict[int, dict[int, int]]:
    graph = nx.Graph()
    graph.add_nodes_from(range(tree.vertex_count))
    graph.add_edges_from(tree.edges())
    return dict(nx.all_pairs_shortest_path_length(graph))


def ordered_trees(edge_count: int):
    for exc in dyck_paths(edge_count):
        yield decode(exc)


def unit_cycle_metric(n: int) -> list[list[int]]:
    return [[min(abs(i - j), n - abs(i - j)) for j in range(n)] for i in range(n)]


@st.composite
def trees(draw, max_vertices: int = 30) -> RootedTree:
    """Trees with parent links chosen by hypothesis, children in id order."""
    picks = draw(st.lists(st.integers(min_value=0, max_value=10**6), max_size=max_vertices - 1))
    parent = [0] + [pick % (v + 1) for v, pick in enumerate(picks)]
    return RootedTree.from_parents(parent, 0)
