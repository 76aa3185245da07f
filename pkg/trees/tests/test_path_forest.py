import pytest

from trees.exceptions import BadPathId
from trees.metric_index import build_index, four_point_check
from trees.path_forest import (
    PathForest,
    insert_path,
    path_distance,
    prefix_order,
    separation,
    to_tree,
)
from trees.tree_core import canonical_newick, from_partial_order


@pytest.fixture
def forest():
    forest = PathForest()
    for path in ('abc', 'abd', '', 'a'):
        forest.insert(path)
    return forest


def random_forest(rng, path_count: int, alphabet: str = 'xyz', longest: int = 8) -> PathForest:
    forest = PathForest()
    for _ in range(path_count):
        length = int(rng.integers(0, longest + 1))
        forest.insert(rng.choice(list(alphabet), size=length).tolist())
    return forest


def test_insert_shares_prefixes(forest):
    assert forest.vertex_count == 5
    assert forest.vertex(0) != forest.vertex(1)
    tree, _ = forest.to_tree()
    branch = forest.vertex(3)
    assert len(tree.children[branch]) == 1
    assert len(tree.children[tree.parent[forest.vertex(0)]]) == 2


def test_empty_path_is_the_origin(forest):
    assert forest.vertex(2) == forest.origin
    assert forest.length(2) == 0


def test_insert_is_idempotent(forest):
    assert insert_path(forest, 'abc') == 0
    assert insert_path(forest, ['a', 'b', 'c']) == 0
    assert len(forest) == 4


def test_separation_examples(forest):
    assert separation(forest, 0, 1) == 2
    assert separation(forest, 0, 0) == 3
    assert separation(forest, 0, 2) == 0


def test_path_distance_examples(forest):
    assert path_distance(forest, 0, 1) == 2
    assert path_distance(forest, 1, 1) == 0
    assert path_distance(forest, 3, 2) == 1


def test_unknown_path_id(forest):
    with pytest.raises(BadPathId):
        forest.tokens(4)
    with pytest.raises(BadPathId):
        path_distance(forest, -1, 0)


def test_single_path_is_a_chain():
    forest = PathForest()
    forest.insert('a')
    tree, vertex_of = to_tree(forest)
    assert tree.vertex_count == 2
    assert tree.labels == ('', 'a')
    assert vertex_of == (1,)


def test_two_paths_branch_after_a():
    forest = PathForest()
    forest.insert('ab')
    forest.insert('ac')
    tree, _ = forest.to_tree()
    assert canonical_newick(tree) == '((b,c)a);'


def test_origin_only():
    forest = PathForest()
    forest.insert('')
    tree, vertex_of = forest.to_tree()
    assert tree.vertex_count == 1
    assert vertex_of == (0,)


def test_paths_property_keeps_insertion_order(forest):
    assert forest.paths == (('a', 'b', 'c'), ('a', 'b', 'd'), (), ('a',))


def test_distance_is_tree_distance(rng):
    for _ in range(100):
        forest = random_forest(rng, int(rng.integers(1, 51)))
        tree, vertex_of = forest.to_tree()
        index = build_index(tree)
        for p in range(len(forest)):
            for q in range(len(forest)):
                assert path_distance(forest, p, q) == index.dist(vertex_of[p], vertex_of[q])


def test_path_metric_is_zero_hyperbolic(rng):
    forest = random_forest(rng, 30, alphabet='ab', longest=6)
    metric = [[forest.distance(p, q) for q in range(len(forest))] for p in range(len(forest))]
    report = four_point_check(metric)
    assert report.is_zero_hyperbolic
    assert report.worst_violation == 0


def test_prefix_order_rebuilds_the_trie():
    forest = PathForest()
    for path in ('', 'a', 'ab', 'ac', 'b', 'acd'):
        forest.insert(path)
    elements, leq = prefix_order(forest)
    tree = from_partial_order(elements, leq)
    trie, _ = forest.to_tree()
    assert canonical_newick(tree, labels=False) == canonical_newick(trie, labels=False)
    assert tree.parent == (0, 0, 1, 1, 0, 3)
