"""k-indegree, the wedge simplex predicate, and the reconstruction drivers.

The k-indegree of a simplex in a direction perpendicular to its affine hull
counts its k-dimensional cofaces at its own height.  A raw diagram count at
that height also picks up unrelated k-simplices, so an inclusion-exclusion
recursion over the proper faces (each isolated by a tilted direction)
removes the double counting.  The simplex predicate then compares the two
k-indegrees across a wedge that isolates exactly one candidate vertex: the
counts differ by one precisely when the candidate simplex exists.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .complexes import Simplex, SimplicialComplex, build_complex, proper_faces
from .edges import find_edges
from .errors import DegeneratePosition, PreconditionViolated
from .geometry import (
    Direction,
    Vector,
    basis_vector,
    dot,
    orthogonal_to_affine_hull,
    primitive_direction,
    second_perpendicular_direction,
    tilt,
    vneg,
)
from .oracle import Oracle, lift_point
from .vertices import vertex_stage

# memo table of one predicate evaluation: proper face -> k-indegree
IndegreeMemo = Dict[Simplex, int]


@dataclass(frozen=True)
class Wedge:
    """Closure of the symmetric difference of two lower half-spaces.

    Both boundary directions are orthogonal to the affine hull of the
    anchoring simplex, whose common height under each is stored alongside.
    """

    lower: Tuple[Direction, Fraction]
    upper: Tuple[Direction, Fraction]


def compute_indegree(
    sigma: Simplex,
    direction: Direction,
    k: int,
    memo: Dict[Simplex, int],
    oracle: Oracle,
    points: Sequence[Vector],
    _depth: int = 0,
) -> int:
    """k-indegree of sigma in a direction that height-isolates it.

    Precondition: every vertex of sigma has the same height under the
    direction and no other vertex does (verified against the dimension-0
    births of the queried diagram).  One logged query here plus one per
    proper face; faces are processed in non-descending dimension, so the
    memo table fills bottom-up and recursive calls never go more than one
    level deep.
    """
    if k <= len(sigma) - 1:
        raise PreconditionViolated("k must exceed the simplex dimension")
    dgm = oracle.query(direction)
    height = dot(direction, points[sigma[0]])
    if any(dot(direction, points[v]) != height for v in sigma[1:]):
        raise PreconditionViolated("direction is not constant on the simplex")
    if dgm.births_at(0, height) != len(sigma):
        raise PreconditionViolated(
            "another vertex shares the simplex height in this direction"
        )

    delta = dgm.deaths_at(k - 1, height) + dgm.births_at(k, height)
    double_counts = 0
    sigma_points = [points[v] for v in sigma]
    all_heights = None
    for tau in proper_faces(sigma):
        if tau not in memo:
            assert _depth == 0, "memo must already cover faces of a recursive call"
            tau_points = [points[v] for v in tau]
            s_prime = second_perpendicular_direction(
                points, sigma_points, tau_points, direction
            )
            if all_heights is None:
                all_heights = [dot(direction, p) for p in points]
            prime_heights = [dot(s_prime, p) for p in points]
            tilted = primitive_direction(
                tilt(all_heights, prime_heights, direction, s_prime)
            )
            memo[tau] = compute_indegree(
                tau, tilted, k, memo, oracle, points, _depth + 1
            )
        double_counts += memo[tau]
    return delta - double_counts


def _isolating_direction(
    candidate: Sequence[int], oracle: Oracle, points: Sequence[Vector]
) -> Direction:
    """Direction orthogonal to the candidate's hull giving it a unique height.

    Plain orthogonalization may leave other vertices on the same hyperplane;
    those form, together with the candidate, an affinely independent set of
    at most d vertices, so a second perpendicular direction pushes them
    strictly above and the tilt towards it removes every tie while staying
    orthogonal to the candidate's hull.
    """
    cand_points = [points[v] for v in candidate]
    s1 = orthogonal_to_affine_hull(cand_points)
    height = dot(s1, cand_points[0])
    level_ids = [u for u in range(len(points)) if dot(s1, points[u]) == height]
    if set(level_ids) == set(candidate):
        return s1
    if len(level_ids) > oracle.ambient_dim:
        raise DegeneratePosition(
            "more than d vertices on one hyperplane; general position violated"
        )
    level_points = [points[u] for u in level_ids]
    s2 = second_perpendicular_direction(points, level_points, cand_points, s1)
    h1 = [dot(s1, p) for p in points]
    h2 = [dot(s2, p) for p in points]
    return primitive_direction(tilt(h1, h2, s1, s2))


def is_simplex(
    sigma: Simplex, vertex: int, oracle: Oracle, points: Sequence[Vector]
) -> bool:
    """Does sigma plus one more vertex form a simplex of the complex?

    Builds the wedge anchored at sigma whose two boundary directions place
    the candidate vertex below respectively above sigma while every other
    vertex stays on one fixed side, then compares the two k-indegrees.
    Exactly 2 * (2^k - 1) logged queries for a k-simplex test.
    """
    if vertex in sigma:
        raise PreconditionViolated("candidate vertex already in the simplex")
    k = len(sigma)
    candidate = tuple(sorted(sigma + (vertex,)))
    cand_points = [points[v] for v in candidate]
    try:
        orthogonal_to_affine_hull(cand_points)
    except DegeneratePosition:
        warnings.warn(
            f"candidate {candidate} is affinely dependent; not a geometric simplex"
        )
        return False
    s_star = _isolating_direction(candidate, oracle, points)

    sigma_points = [points[v] for v in sigma]
    s3 = second_perpendicular_direction(points, cand_points, sigma_points, s_star)

    star_heights = [dot(s_star, p) for p in points]
    third_heights = [dot(s3, p) for p in points]
    s_lower = primitive_direction(tilt(star_heights, third_heights, s_star, s3))
    flipped = tilt([-h for h in star_heights], third_heights, vneg(s_star), s3)
    s_upper = primitive_direction(vneg(flipped))
    anchor = points[sigma[0]]
    wedge = Wedge((s_lower, dot(s_lower, anchor)), (s_upper, dot(s_upper, anchor)))

    upper = compute_indegree(sigma, wedge.upper[0], k, {}, oracle, points)
    lower = compute_indegree(sigma, wedge.lower[0], k, {}, oracle, points)
    return abs(upper - lower) == 1


def is_simplex_lifted(
    sigma: Simplex,
    vertex: int,
    oracle_lifted: Oracle,
    points: Sequence[Vector],
) -> bool:
    """Simplex predicate for codimension zero, run on the parabolic lift."""
    lifted_points = [lift_point(p) for p in points]
    return is_simplex(sigma, vertex, oracle_lifted, lifted_points)


# ---------------------------------------------------------------------------
# drivers


@dataclass
class ReconstructionStats:
    """Query accounting per stage, filled in by the drivers."""

    vertex_queries: int = 0
    edge_queries: int = 0
    predicate_calls: List[Tuple[int, int]] = field(default_factory=list)
    lifted_predicate_calls: List[Tuple[int, int]] = field(default_factory=list)
    used_fallback_basis: bool = False

    @property
    def higher_queries(self) -> int:
        return sum(q for _, q in self.predicate_calls)


def reconstruct(
    oracle: Oracle,
    strict: bool = True,
    codim_zero: bool = False,
    oracle_lifted: Optional[Oracle] = None,
    stats: Optional[ReconstructionStats] = None,
) -> SimplicialComplex:
    """Recover the full unknown complex from oracle queries alone.

    Vertices, then edges, then each higher dimension i while the previous
    one is nonempty and i <= d - 1 (emptiness propagates upward by face
    closure, so the top dimension needs no prior knowledge).  With
    ``codim_zero`` the d-simplices are tested afterwards through the lifted
    oracle.
    """
    d = oracle.ambient_dim
    mark = oracle.log.count
    points, frame = vertex_stage(oracle, strict)
    if stats is not None:
        stats.vertex_queries = oracle.log.count - mark
        stats.used_fallback_basis = frame.u1 != basis_vector(d, 0)

    mark = oracle.log.count
    edges = find_edges(points, oracle, frame)
    if stats is not None:
        stats.edge_queries = oracle.log.count - mark

    simplices: Set[Simplex] = {(v,) for v in range(len(points))}
    simplices.update(edges)
    previous: List[Simplex] = sorted(edges)

    dim = 2
    while previous and dim <= d - 1:
        found: Set[Simplex] = set()
        for sigma in previous:
            for vertex in range(len(points)):
                if vertex in sigma:
                    continue
                mark = oracle.log.count
                hit = is_simplex(sigma, vertex, oracle, points)
                if stats is not None:
                    stats.predicate_calls.append((dim, oracle.log.count - mark))
                if hit:
                    found.add(tuple(sorted(sigma + (vertex,))))
        simplices.update(found)
        previous = sorted(found)
        dim += 1

    if codim_zero and previous and dim == d:
        lifted = oracle_lifted if oracle_lifted is not None else oracle.lifted()
        found = set()
        for sigma in previous:
            for vertex in range(len(points)):
                if vertex in sigma:
                    continue
                mark = lifted.log.count
                hit = is_simplex_lifted(sigma, vertex, lifted, points)
                if stats is not None:
                    stats.lifted_predicate_calls.append((d, lifted.log.count - mark))
                if hit:
                    found.add(tuple(sorted(sigma + (vertex,))))
        simplices.update(found)

    vertex_map = {i: points[i] for i in range(len(points))}
    return build_complex(d, vertex_map, simplices)


def reconstruct_codim_zero(
    oracle: Oracle,
    oracle_lifted: Optional[Oracle] = None,
    strict: bool = True,
    stats: Optional[ReconstructionStats] = None,
) -> SimplicialComplex:
    """Reconstruction allowing simplices of full ambient dimension."""
    return reconstruct(
        oracle,
        strict=strict,
        codim_zero=True,
        oracle_lifted=oracle_lifted,
        stats=stats,
    )
