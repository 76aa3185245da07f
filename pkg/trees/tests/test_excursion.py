from collections import Counter

import pytest
from hypothesis import given

from trees.exceptions import (
    BadEndpoint,
    BadStep,
    FormatError,
    IndexOutOfRange,
    InvalidInput,
    NegativeHeight,
)
from trees.excursion import (
    decode,
    dyck_paths,
    encode,
    excursion_distance,
    random_excursion,
    root_degree,
    validate_excursion,
    visits,
)
from trees.tree_core import build_tree, canonical_newick, ordered_newick

from .factories import bfs_distances, ordered_trees, trees

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


# =========================
# Validation
# =========================
@pytest.mark.parametrize('heights', [[0], [0, 1, 2, 1, 0], [0, 1, 0, 1, 0]])
def test_valid_excursions(heights):
    assert validate_excursion(heights).heights == tuple(heights)


def test_zero_step_is_reported_at_its_start():
    with pytest.raises(BadStep) as exc_info:
        validate_excursion([0, 1, 1, 0])
    assert exc_info.value.index == 1


def test_negative_height():
    with pytest.raises(NegativeHeight) as exc_info:
        validate_excursion([0, -1, 0])
    assert exc_info.value.index == 1


@pytest.mark.parametrize('heights', [[], [1, 0], [0, 1], [0, 1, 2, 1]])
def test_bad_endpoints(heights):
    with pytest.raises(BadEndpoint):
        validate_excursion(heights)


def test_non_integer_heights():
    with pytest.raises(FormatError):
        validate_excursion([0, 1.5, 0])


def test_validation_errors_are_bad_input():
    with pytest.raises(InvalidInput):
        validate_excursion([0, 2, 0])


# =========================
# encode / decode
# =========================
def test_encode_single_vertex():
    assert encode(build_tree([], root=0, vertex_count=1)).heights == (0,)


def test_encode_hand_example(example_tree):
    assert encode(example_tree).heights == (0, 1, 2, 1, 0, 1, 0)


def test_encode_chain(chain):
    assert encode(chain).heights == (0, 1, 2, 1, 0)


def test_encode_follows_child_order():
    tree = build_tree([(0, 1), (0, 2), (1, 3)], root=0, child_order=lambda v: -v)
    assert encode(tree).heights == (0, 1, 0, 1, 2, 1, 0)


def test_decode_single_vertex():
    tree = decode(validate_excursion([0]))
    assert tree.vertex_count == 1


def test_decode_two_leaf_star():
    tree = decode(validate_excursion([0, 1, 0, 1, 0]))
    assert tree.children[0] == (1, 2)
    assert canonical_newick(tree) == '(1,2)0;'


def test_decode_inverts_hand_example(example_tree):
    tree = decode(validate_excursion([0, 1, 2, 1, 0, 1, 0]))
    # ids follow first visit, so the grandchild is vertex 2
    assert tree.parent == (0, 0, 1, 0)
    assert ordered_newick(tree, labels=False) == ordered_newick(example_tree, labels=False)


def test_visits_follow_the_walk():
    assert visits(validate_excursion([0, 1, 2, 1, 0, 1, 0])) == (0, 1, 2, 1, 0, 3, 0)


@pytest.mark.parametrize('edge_count', range(9))
def test_every_dyck_path_round_trips(edge_count):
    paths = list(dyck_paths(edge_count))
    assert len(paths) == CATALAN[edge_count]
    assert len({exc.heights for exc in paths}) == len(paths)
    for exc in paths:
        tree = decode(exc)
        assert tree.edge_count == edge_count
        assert encode(tree) == exc


@pytest.mark.parametrize('edge_count', range(9))
def test_every_ordered_tree_round_trips(edge_count):
    count = 0
    for tree in ordered_trees(edge_count):
        back = decode(encode(tree))
        assert back.parent == tree.parent
        assert back.children == tree.children
        count += 1
    assert count == CATALAN[edge_count]


@given(trees())
def test_encode_then_decode_keeps_the_ordered_shape(tree):
    exc = encode(tree)
    assert len(exc) == 2 * tree.edge_count + 1
    back = decode(exc)
    assert ordered_newick(back, labels=False) == ordered_newick(tree, labels=False)


# =========================
# Distances
# =========================
def test_excursion_distance_examples():
    exc = validate_excursion([0, 1, 2, 1, 0, 1, 0])
    assert excursion_distance(exc, 1, 3) == 0
    assert excursion_distance(exc, 1, 5) == 2
    assert excursion_distance(exc, 5, 1) == 2
    assert excursion_distance(exc, 4, 4) == 0


def test_excursion_distance_rejects_bad_times():
    exc = validate_excursion([0, 1, 0])
    with pytest.raises(IndexOutOfRange):
        exc.distance(0, 3)
    with pytest.raises(IndexOutOfRange):
        exc.distance(-1, 0)


@pytest.mark.parametrize('edge_count', range(1, 9))
def test_excursion_distance_is_tree_distance(edge_count):
    for exc in dyck_paths(edge_count):
        tree = decode(exc)
        at = visits(exc)
        truth = bfs_distances(tree)
        for s in range(len(exc)):
            for t in range(len(exc)):
                d = exc.distance(s, t)
                assert d == truth[at[s]][at[t]]
                assert (d == 0) == (at[s] == at[t])


def test_root_degree_examples():
    assert root_degree(validate_excursion([0])) == 0
    assert root_degree(validate_excursion([0, 1, 0, 1, 0])) == 2
    assert root_degree(validate_excursion([0, 1, 2, 1, 0])) == 1


@given(trees())
def test_root_degree_counts_root_children(tree):
    assert root_degree(encode(tree)) == len(tree.children[tree.root])


# =========================
# Random excursions
# =========================
def test_one_edge_has_one_excursion():
    for seed in range(5):
        assert random_excursion(1, seed).heights == (0, 1, 0)


def test_two_edges():
    outcomes = {random_excursion(2, seed).heights for seed in range(50)}
    assert outcomes == {(0, 1, 0, 1, 0), (0, 1, 2, 1, 0)}


def test_random_excursion_is_reproducible():
    assert random_excursion(30, 7) == random_excursion(30, 7)


def test_random_excursions_are_valid():
    for seed in range(100):
        exc = random_excursion(25, seed)
        assert exc.edge_count == 25


def test_random_excursion_is_roughly_uniform():
    counts = Counter(random_excursion(3, seed).heights for seed in range(5000))
    assert set(counts) == {exc.heights for exc in dyck_paths(3)}
    assert all(850 <= count <= 1150 for count in counts.values())


@pytest.mark.parametrize('edge_count', [0, -3, True])
def test_random_excursion_needs_a_positive_edge_count(edge_count):
    with pytest.raises(InvalidInput):
        random_excursion(edge_count, 0)


def test_negative_seeds_are_accepted():
    exc = random_excursion(12, -5)
    assert exc.edge_count == 12
    assert exc == random_excursion(12, -5)
    assert exc == random_excursion(12, 2**64 - 5)
