import pytest

from apdrec import (
    GeneralPositionViolated,
    GenerationFailure,
    GeneratorConfig,
    edge_query_bound,
    generate_complex,
    serialize_complex,
    validate_general_position,
    verify_roundtrip,
)

from conftest import cx


def test_density_one_gives_full_skeleton():
    K = generate_complex(GeneratorConfig(3, 4, 2, densities=[1.0, 1.0], seed=1))
    assert K.n_k(0) == 4 and K.n_k(1) == 6 and K.n_k(2) == 4
    assert K.kappa == 2


def test_density_zero_gives_point_cloud():
    K = generate_complex(GeneratorConfig(3, 5, 2, densities=[0.0, 0.0], seed=1))
    assert K.kappa == 0 and K.n == 5


def test_generator_respects_general_position():
    for seed in range(10):
        K = generate_complex(GeneratorConfig(4, 9, 1, densities=[0.4], seed=seed))
        assert validate_general_position(K).ok


def test_generator_deterministic_per_seed():
    cfg = GeneratorConfig(3, 7, 2, densities=[0.6, 0.5], seed=123)
    a = serialize_complex(generate_complex(cfg))
    b = serialize_complex(generate_complex(cfg))
    assert a == b
    c = serialize_complex(
        generate_complex(GeneratorConfig(3, 7, 2, densities=[0.6, 0.5], seed=124))
    )
    assert a != c


def test_generator_validates_config():
    from apdrec import InvalidInput

    with pytest.raises(InvalidInput):
        generate_complex(GeneratorConfig(3, 5, 4, densities=[0.5], seed=0))
    with pytest.raises(InvalidInput):
        generate_complex(GeneratorConfig(3, 5, 2, densities=[1.5], seed=0))


def test_generator_fails_when_grid_exhausted():
    # denominator bound 1 leaves nine integer first coordinates in [-4, 4]
    with pytest.raises(GenerationFailure):
        generate_complex(
            GeneratorConfig(
                2, 10, 0, densities=[], seed=0, coordinate_denominator_bound=1,
                rejection_limit=500,
            )
        )


def test_verify_tetrahedron_boundary_in_r4():
    K = cx(
        4,
        [(0, 0, 0, 1), (1, 2, 0, 0), (2, 1, 1, 0), (3, 3, -1, 1)],
        [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)],
    )
    report = verify_roundtrip(K)
    assert report.exact_match
    assert report.vertex_queries == 2 * 4 - 1 == 7
    assert report.all_bounds_ok


def test_verify_codim_zero_filled_triangle(filled_triangle_r2):
    report = verify_roundtrip(filled_triangle_r2, codim_zero=True)
    assert report.exact_match
    assert report.lifted_predicate_calls  # the d-stage actually ran


def test_verify_adversarial_e1_ties():
    K = cx(2, [(0, 0), (0, 1), (1, -1)], [(0, 1), (1, 2)])
    with pytest.raises(GeneralPositionViolated):
        verify_roundtrip(K, strict=True)
    report = verify_roundtrip(K, strict=False)
    assert report.exact_match
    assert report.used_fallback_basis
    assert report.vertex_queries == 2 * 2 - 1 + 2
    assert report.vertex_bound_ok  # bound accounts for the two extra diagrams


def test_fallback_basis_through_all_stages():
    # e1 tie between vertices 0 and 1, triangles present
    K = cx(
        3,
        [(0, 0, 1), (0, 3, -1), (1, 1, 2), (2, 0, 0), (3, 4, 3)],
        [(0, 1, 2), (1, 2, 3), (2, 3, 4), (0, 3)],
    )
    report = verify_roundtrip(K, strict=False)
    assert report.exact_match and report.used_fallback_basis
    assert report.vertex_queries == 2 * 3 - 1 + 2
    assert report.predicate_bound_ok


def test_edge_query_bound_formula():
    K = cx(2, [(0, 0), (1, 2), (2, 1)], [(0, 1), (1, 2)])
    # n0 = 3: ceil(log2 3) + 1 = 3; degrees 1, 2, 1
    expected = 1 + 2 * ((2 * 1 + 1) * 3 + (2 * 2 + 1) * 3 + (2 * 1 + 1) * 3)
    assert edge_query_bound(K, 3) == expected


def test_report_mismatch_fields():
    K = cx(2, [(0, 0), (1, 2), (2, 1)], [(0, 1)])
    report = verify_roundtrip(K)
    assert report.exact_match and not report.missing and not report.extra


def test_verify_report_deterministic():
    cfg = GeneratorConfig(3, 6, 2, densities=[0.6, 0.7], seed=77)
    a = verify_roundtrip(generate_complex(cfg))
    b = verify_roundtrip(generate_complex(cfg))
    assert a == b


def test_roundtrip_edge_cases():
    single = cx(3, [(1, 2, 3)], [])
    report = verify_roundtrip(single)
    assert report.exact_match and report.vertex_queries == 5

    from apdrec import Oracle, build_complex, complexes_match, reconstruct

    empty = build_complex(2, {}, [])
    assert complexes_match(reconstruct(Oracle(empty)), empty)
