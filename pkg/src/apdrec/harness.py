"""Random general-position complexes and round-trip verification.

The generator rejection-samples vertices until the checkable general
position properties hold (unique first-axis heights, no projected collinear
triple, affine independence of every d+1 points), then grows the simplex set
dimension by dimension: a candidate is eligible only once all its facets
were accepted, and is kept with the configured per-dimension probability.
The output is face-closed by construction and byte-reproducible per seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .complexes import Simplex, SimplicialComplex, build_complex
from .errors import GenerationFailure, InvalidInput
from .geometry import Vector, _rref, vsub
from .higher import ReconstructionStats, reconstruct
from .oracle import Oracle, lift_point


@dataclass
class GeneratorConfig:
    ambient_dim: int
    vertex_count: int
    max_dim: int
    densities: Sequence[float] = (0.5,)
    seed: int = 0
    coordinate_denominator_bound: int = 64
    lift_general_position: bool = False  # also keep lifted d+2 subsets independent
    rejection_limit: int = 5000

    def density(self, dim: int) -> float:
        """Acceptance probability for simplices of the given dimension >= 1."""
        if not self.densities:
            return 0.0
        idx = min(dim - 1, len(self.densities) - 1)
        return float(self.densities[idx])


def _affinely_independent(points: Sequence[Vector]) -> bool:
    diffs = [list(vsub(p, points[0])) for p in points[1:]]
    _, pivots = _rref(diffs)
    return len(pivots) == len(points) - 1


def _vertex_ok(
    candidate: Vector, accepted: List[Vector], config: GeneratorConfig
) -> bool:
    d = config.ambient_dim
    for p in accepted:
        if p[0] == candidate[0]:
            return False
    for a, b in combinations(accepted, 2):
        cross = (b[0] - a[0]) * (candidate[1] - a[1]) - (b[1] - a[1]) * (
            candidate[0] - a[0]
        )
        if cross == 0:
            return False
    if len(accepted) >= d:
        for subset in combinations(accepted, d):
            if not _affinely_independent(list(subset) + [candidate]):
                return False
    if config.lift_general_position and len(accepted) >= d + 1:
        lifted = [lift_point(p) for p in accepted]
        lifted_candidate = lift_point(candidate)
        for subset in combinations(lifted, d + 1):
            if not _affinely_independent(list(subset) + [lifted_candidate]):
                return False
    return True


def generate_complex(config: GeneratorConfig) -> SimplicialComplex:
    """Deterministic random complex satisfying the general position checks."""
    d, n0 = config.ambient_dim, config.vertex_count
    if d < 2:
        raise InvalidInput("generator needs ambient dimension >= 2")
    if n0 < 1:
        raise InvalidInput("need at least one vertex")
    if config.max_dim > d:
        raise InvalidInput("simplices cannot exceed the ambient dimension")
    if any(not 0 <= float(x) <= 1 for x in config.densities):
        raise InvalidInput("densities must lie in [0, 1]")
    rng = random.Random(config.seed)
    bound = config.coordinate_denominator_bound
    span = 4 * bound

    points: List[Vector] = []
    rejections = 0
    while len(points) < n0:
        candidate = tuple(Fraction(rng.randint(-span, span), bound) for _ in range(d))
        if _vertex_ok(candidate, points, config):
            points.append(candidate)
        else:
            rejections += 1
            if rejections > config.rejection_limit:
                raise GenerationFailure(
                    f"exceeded {config.rejection_limit} vertex rejections"
                )

    accepted: Dict[int, Set[Simplex]] = {0: {(v,) for v in range(n0)}}
    for dim in range(1, config.max_dim + 1):
        density = config.density(dim)
        accepted[dim] = set()
        lower = accepted[dim - 1]
        for candidate in combinations(range(n0), dim + 1):
            if all(
                candidate[:i] + candidate[i + 1 :] in lower
                for i in range(len(candidate))
            ):
                if rng.random() < density:
                    accepted[dim].add(candidate)

    simplices = set().union(*accepted.values())
    vertex_map = {i: points[i] for i in range(n0)}
    return build_complex(d, vertex_map, simplices)


# ---------------------------------------------------------------------------
# round-trip verification


def edge_query_bound(complex_: SimplicialComplex, n0: int) -> int:
    """Concrete per-run budget for the edge stage.

    One shared diagram plus, for every vertex, at most (2 deg(v) + 1) live
    intervals each split through ceil(log2 n0) + 1 levels at two diagrams a
    split.
    """
    log_term = (n0 - 1).bit_length() + 1 if n0 > 1 else 1
    degree: Dict[int, int] = {v: 0 for v in complex_.vertices}
    for edge in complex_.simplices_of_dim(1):
        degree[edge[0]] += 1
        degree[edge[1]] += 1
    return 1 + 2 * sum((2 * degree[v] + 1) * log_term for v in complex_.vertices)


@dataclass
class VerificationReport:
    exact_match: bool
    vertex_queries: int
    edge_queries: int
    predicate_calls: List[Tuple[int, int]]
    lifted_predicate_calls: List[Tuple[int, int]]
    total_queries: int
    vertex_bound_ok: bool
    edge_bound: int
    edge_bound_ok: bool
    predicate_bound_ok: bool
    missing: List[Simplex] = field(default_factory=list)
    extra: List[Simplex] = field(default_factory=list)
    used_fallback_basis: bool = False

    @property
    def all_bounds_ok(self) -> bool:
        return self.vertex_bound_ok and self.edge_bound_ok and self.predicate_bound_ok


def _relabel(
    recovered: SimplicialComplex, truth: SimplicialComplex
) -> Optional[Dict[int, int]]:
    """Map recovered vertex ids to ground-truth ids by exact coordinates."""
    by_point = {p: vid for vid, p in truth.vertices.items()}
    mapping = {}
    for vid, p in recovered.vertices.items():
        if p not in by_point:
            return None
        mapping[vid] = by_point[p]
    if len(set(mapping.values())) != len(truth.vertices):
        return None
    return mapping


def complexes_match(recovered: SimplicialComplex, truth: SimplicialComplex) -> bool:
    """Exact equality of embedded complexes, up to vertex relabeling.

    Reconstruction numbers vertices in sweep order, which need not match the
    ground truth's ids; points are matched by exact coordinates first.
    """
    if recovered.ambient_dim != truth.ambient_dim:
        return False
    mapping = _relabel(recovered, truth)
    if mapping is None:
        return False
    remapped = {tuple(sorted(mapping[v] for v in s)) for s in recovered.simplices}
    return remapped == set(truth.simplices)


def verify_roundtrip(
    truth: SimplicialComplex,
    strict: bool = True,
    codim_zero: bool = False,
) -> VerificationReport:
    """Reconstruct from a fresh oracle over the truth and audit everything."""
    oracle = Oracle(truth)
    stats = ReconstructionStats()
    recovered = reconstruct(
        oracle, strict=strict, codim_zero=codim_zero, stats=stats
    )

    mapping = _relabel(recovered, truth)
    if mapping is None:
        recovered_set: Set[Simplex] = set()
    else:
        recovered_set = {
            tuple(sorted(mapping[v] for v in s)) for s in recovered.simplices
        }
    truth_set = set(truth.simplices)
    missing = sorted(truth_set - recovered_set, key=lambda s: (len(s), s))
    extra = sorted(recovered_set - truth_set, key=lambda s: (len(s), s))
    exact = mapping is not None and not missing and not extra

    d = truth.ambient_dim
    n0 = len(truth.vertices)
    expected_vertex = 2 * d - 1 + (2 if stats.used_fallback_basis else 0)
    bound = edge_query_bound(truth, n0)
    predicate_ok = all(q == 2 * (2**k - 1) for k, q in stats.predicate_calls) and all(
        q == 2 * (2**k - 1) for k, q in stats.lifted_predicate_calls
    )
    return VerificationReport(
        exact_match=exact,
        vertex_queries=stats.vertex_queries,
        edge_queries=stats.edge_queries,
        predicate_calls=stats.predicate_calls,
        lifted_predicate_calls=stats.lifted_predicate_calls,
        total_queries=oracle.log.count,
        vertex_bound_ok=stats.vertex_queries == expected_vertex,
        edge_bound=bound,
        edge_bound_ok=stats.edge_queries <= bound,
        predicate_bound_ok=predicate_ok,
        missing=missing,
        extra=extra,
        used_fallback_basis=stats.used_fallback_basis,
    )


def verify_config(
    config: GeneratorConfig, strict: bool = True, codim_zero: bool = False
) -> VerificationReport:
    return verify_roundtrip(
        generate_complex(config), strict=strict, codim_zero=codim_zero
    )
