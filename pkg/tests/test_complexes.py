import random
from fractions import Fraction
from itertools import combinations

import pytest

from apdrec import (
    GeneratorConfig,
    InvalidInput,
    ParseError,
    build_complex,
    generate_complex,
    parse_complex,
    serialize_complex,
    validate_general_position,
)

from conftest import cx

F = Fraction


def test_closure_of_triangle():
    K = cx(2, [(0, 0), (1, 0), (0, 1)], [(0, 1, 2)])
    assert K.n_k(0) == 3 and K.n_k(1) == 3 and K.n_k(2) == 1
    assert K.kappa == 2


def test_closure_of_path():
    K = cx(2, [(0, 0), (1, 1), (2, 0)], [(0, 1), (1, 2)])
    assert K.n_k(0) == 3 and K.n_k(1) == 2 and K.kappa == 1


def test_closure_triangle_plus_edge():
    K = cx(2, [(0, 0), (1, 0), (0, 1), (2, 2)], [(0, 1, 2), (2, 3)])
    assert K.n_k(0) == 4
    assert sorted(K.simplices_of_dim(1)) == [(0, 1), (0, 2), (1, 2), (2, 3)]
    assert K.simplices_of_dim(2) == [(0, 1, 2)]


def test_build_complex_idempotent_on_closed_input():
    K = cx(2, [(0, 0), (1, 0), (0, 1)], [(0, 1, 2)])
    again = build_complex(2, K.vertices, K.simplices)
    assert again == K


def test_closure_property_random():
    rng = random.Random(3)
    for seed in range(5):
        K = generate_complex(
            GeneratorConfig(3, 6, 2, densities=[0.7, 0.7], seed=seed)
        )
        for s in K.simplices:
            for size in range(1, len(s)):
                for face in combinations(s, size):
                    assert face in K.simplices
        assert K.n == sum(K.n_k(k) for k in range(K.kappa + 1))
        _ = rng  # deterministic loop; rng unused on purpose


def test_build_complex_rejects_unknown_vertex():
    with pytest.raises(InvalidInput):
        build_complex(2, {0: (0, 0), 1: (1, 0)}, [(0, 99)])


def test_build_complex_rejects_duplicate_vertex():
    with pytest.raises(InvalidInput):
        build_complex(2, {0: (0, 0), 1: (1, 0)}, [(1, 1)])


def test_build_complex_rejects_excess_dimension():
    with pytest.raises(InvalidInput):
        build_complex(1, {0: (0,), 1: (1,), 2: (2,)}, [(0, 1, 2)])


# ---------------------------------------------------------------------------
# general position


def test_general_position_ok():
    K = cx(2, [(0, 0), (1, 1), (2, 3)], [])
    report = validate_general_position(K)
    assert report.unique_e1_heights and report.no_three_projected_collinear
    assert report.ok and report.violations == []


def test_general_position_e1_tie():
    K = cx(2, [(0, 0), (0, 1)], [])
    report = validate_general_position(K)
    assert not report.unique_e1_heights
    assert ("e1-tie", 0, 1) in report.violations


def test_general_position_collinear():
    K = cx(2, [(0, 0), (1, 1), (2, 2)], [])
    report = validate_general_position(K)
    assert not report.no_three_projected_collinear
    assert any(v[0] == "collinear" for v in report.violations)


# ---------------------------------------------------------------------------
# text format


def test_roundtrip_triangle():
    K = cx(2, [(0, 0), (1, 0), (0, 1)], [(0, 1, 2)])
    assert parse_complex(serialize_complex(K)) == K


def test_roundtrip_rational_coordinates():
    K = cx(2, [(F(1, 3), F(-2, 5)), (1, 7)], [(0, 1)])
    text = serialize_complex(K)
    assert "1/3 -2/5" in text
    assert parse_complex(text) == K


def test_parse_rejects_unknown_id():
    text = "dim 2\nvertices 3\n0 0 0\n1 1 0\n2 0 1\nsimplices 1\n0 99\n"
    with pytest.raises(ParseError):
        parse_complex(text)


def test_parse_reports_line_number():
    text = "dim 2\nvertices 1\n0 zero 0\nsimplices 0\n"
    with pytest.raises(ParseError) as err:
        parse_complex(text)
    assert err.value.line_number == 3


def test_parse_ignores_comments_and_blanks():
    text = "# a comment\n\ndim 2\nvertices 1\n0 3 4  # trailing\n\nsimplices 0\n"
    K = parse_complex(text)
    assert K.vertices[0] == (3, 4)


def test_roundtrip_random_complexes():
    for seed in range(6):
        K = generate_complex(
            GeneratorConfig(3, 7, 2, densities=[0.6, 0.6], seed=seed)
        )
        assert parse_complex(serialize_complex(K)) == K
