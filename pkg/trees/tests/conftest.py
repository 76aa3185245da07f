from pathlib import Path

import numpy as np
import pytest

from trees.contour import ScalarField
from trees.tree_core import build_tree

GOLDEN_DIR = Path(__file__).resolve().parent / 'golden'


@pytest.fixture
def golden():
    """Read a golden file by name."""

    def read(name: str) -> str:
        return (GOLDEN_DIR / name).read_text(encoding='utf-8')

    return read


@pytest.fixture
def golden_path():
    return lambda name: GOLDEN_DIR / name


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def example_tree():
    """Root 0 with children 1, 2 (in that order); 1 has child 3."""
    return build_tree([(0, 1), (0, 2), (1, 3)], root=0)


@pytest.fixture
def chain():
    return build_tree([(0, 1), (1, 2)], root=0)


@pytest.fixture
def star():
    return build_tree([(0, 1), (0, 2), (0, 3)], root=0)


@pytest.fixture
def path_field():
    """Path 0 - 1 - 2 with values 5, 2, 7."""
    return ScalarField.build([5, 2, 7], [(0, 1), (1, 2)])
