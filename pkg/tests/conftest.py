import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from apdrec import build_complex


def cx(ambient_dim, points, maximal):
    """Shorthand complex constructor for tests."""
    vertex_map = {i: tuple(Fraction(c) for c in p) for i, p in enumerate(points)}
    return build_complex(ambient_dim, vertex_map, maximal)


@pytest.fixture
def filled_triangle_r2():
    return cx(2, [(0, 0), (Fraction(1, 2), 1), (1, 0)], [(0, 1, 2)])


@pytest.fixture
def hollow_triangle_r2():
    return cx(2, [(0, 0), (Fraction(1, 2), 1), (1, 0)], [(0, 1), (0, 2), (1, 2)])
