"""Directional augmented persistence diagrams and the query oracle.

The augmented diagram keeps every zero-persistence pair, so each simplex of
the complex shows up as exactly one birth or death event.  Pairing is plain
left-to-right boundary-matrix reduction over Z/2 on a compatible index
filtration; columns are bitmask integers.

The oracle memoizes per direction: directions are canonicalized to primitive
integer form (divide out the gcd, orientation kept), so positively scaled
duplicates share one reduction, with the returned heights rescaled exactly.
Every call still counts as one logged query; a request that is restricted to
one dimension is the same logical query as the full diagram.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .complexes import Simplex, SimplicialComplex, facets
from .errors import InvalidInput
from .geometry import Direction, Vector, dot, format_rational, is_zero, primitive_direction

INF = math.inf


class DiagramPoint(NamedTuple):
    dim: int
    birth: Fraction
    death: object  # Fraction, or INF for essential classes

    @property
    def essential(self) -> bool:
        return self.death == INF

    @property
    def zero_persistence(self) -> bool:
        return self.death == self.birth


@dataclass(frozen=True)
class AugmentedDiagram:
    """Multiset of (dim, birth, death) points for one query direction."""

    direction: Direction
    points: Tuple[DiagramPoint, ...]

    def restrict(self, dim: int) -> "AugmentedDiagram":
        return AugmentedDiagram(
            self.direction, tuple(p for p in self.points if p.dim == dim)
        )

    def in_dim(self, dim: int) -> List[DiagramPoint]:
        return [p for p in self.points if p.dim == dim]

    def births(self, dim: int) -> List[Fraction]:
        return sorted(p.birth for p in self.points if p.dim == dim)

    def births_at(self, dim: int, height: Fraction) -> int:
        return sum(1 for p in self.points if p.dim == dim and p.birth == height)

    def deaths_at(self, dim: int, height: Fraction) -> int:
        return sum(
            1 for p in self.points if p.dim == dim and not p.essential and p.death == height
        )

    def multiset(self) -> Dict[DiagramPoint, int]:
        out: Dict[DiagramPoint, int] = {}
        for p in self.points:
            out[p] = out.get(p, 0) + 1
        return out


# ---------------------------------------------------------------------------
# filtration and reduction


def lower_star_heights(
    complex_: SimplicialComplex, direction: Direction
) -> Dict[Simplex, Fraction]:
    """Height of each simplex: the maximum vertex height in the direction."""
    vh = {v: dot(direction, p) for v, p in complex_.vertices.items()}
    return {s: max(vh[v] for v in s) for s in complex_.simplices}


def index_filtration(
    complex_: SimplicialComplex, direction: Direction
) -> List[Simplex]:
    """Total order compatible with the lower-star filtration.

    Sorted by (height, dimension, vertex tuple); the dimension tie-break puts
    faces before cofaces within one height class.  Any other compatible
    choice yields the same augmented diagram.
    """
    heights = lower_star_heights(complex_, direction)
    return sorted(complex_.simplices, key=lambda s: (heights[s], len(s), s))


def _reduce_pairs(
    order: Sequence[Simplex],
) -> Tuple[List[Tuple[int, int]], List[int]]:
    """Z/2 column reduction; returns (birth, death) index pairs and essentials."""
    index_of = {s: i for i, s in enumerate(order)}
    pairs: List[Tuple[int, int]] = []
    pivot: Dict[int, int] = {}
    reduced: List[int] = [0] * len(order)
    paired = set()
    for j, simplex in enumerate(order):
        col = 0
        if len(simplex) > 1:
            for f in facets(simplex):
                col ^= 1 << index_of[f]
        while col:
            low = col.bit_length() - 1
            k = pivot.get(low)
            if k is None:
                break
            col ^= reduced[k]
        if col:
            low = col.bit_length() - 1
            pivot[low] = j
            reduced[j] = col
            pairs.append((low, j))
            paired.add(low)
            paired.add(j)
    essentials = [i for i in range(len(order)) if i not in paired]
    return pairs, essentials


def _emit_points(
    order: Sequence[Simplex],
    pairs: Iterable[Tuple[int, int]],
    essentials: Iterable[int],
    heights: Dict[Simplex, Fraction],
) -> Tuple[DiagramPoint, ...]:
    pts = []
    for i, j in pairs:
        si, sj = order[i], order[j]
        pts.append(DiagramPoint(len(si) - 1, heights[si], heights[sj]))
    for i in essentials:
        si = order[i]
        pts.append(DiagramPoint(len(si) - 1, heights[si], INF))
    pts.sort(key=lambda p: (p.dim, p.birth, p.death))
    return tuple(pts)


def compute_apd(complex_: SimplicialComplex, direction: Direction) -> AugmentedDiagram:
    """Augmented persistence diagram of the lower-star filtration."""
    direction = tuple(Fraction(x) for x in direction)
    order = index_filtration(complex_, direction)
    heights = lower_star_heights(complex_, direction)
    pairs, essentials = _reduce_pairs(order)
    return AugmentedDiagram(direction, _emit_points(order, pairs, essentials, heights))


def compute_apd_with_order(
    complex_: SimplicialComplex, direction: Direction, order: Sequence[Simplex]
) -> AugmentedDiagram:
    """APD over an explicitly supplied compatible index filtration.

    Exists so tests can exercise the tie-break invariance: any face-respecting
    permutation of equal-height simplices must give the identical multiset.
    """
    if len(order) != complex_.n or set(order) != set(complex_.simplices):
        raise InvalidInput("order is not a permutation of the complex")
    direction = tuple(Fraction(x) for x in direction)
    heights = lower_star_heights(complex_, direction)
    pairs, essentials = _reduce_pairs(order)
    return AugmentedDiagram(direction, _emit_points(order, pairs, essentials, heights))


def count_at(dgm_k, dgm_km1, height: Fraction) -> int:
    """Births at the height in dimension k plus deaths there in dimension k-1.

    By the simplex-count correspondence this equals the number of k-simplices
    whose lower-star height is exactly the given value.
    """

    def _points(dgm):
        return dgm.points if isinstance(dgm, AugmentedDiagram) else dgm

    births = sum(1 for p in _points(dgm_k) if p.birth == height)
    deaths = sum(
        1 for p in _points(dgm_km1) if not p.essential and p.death == height
    )
    return births + deaths


# ---------------------------------------------------------------------------
# parabolic lift


def lift(complex_: SimplicialComplex) -> SimplicialComplex:
    """Map each vertex v to (v, v.v); combinatorics unchanged."""
    lifted = {v: p + (dot(p, p),) for v, p in complex_.vertices.items()}
    return SimplicialComplex(complex_.ambient_dim + 1, lifted, complex_.simplices)


def lift_point(point: Vector) -> Vector:
    return tuple(point) + (dot(point, point),)


# ---------------------------------------------------------------------------
# oracle with query accounting


@dataclass
class QueryLog:
    """Per-direction accounting: one increment per logical diagram request.

    Diagram computation itself is pure; concurrent querying is safe exactly
    when these increments are serialized or atomic (default use is
    single-threaded).
    """

    directions: List[Direction] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.directions)

    def record(self, direction: Direction) -> None:
        self.directions.append(tuple(direction))


def query(
    log: QueryLog,
    complex_: SimplicialComplex,
    direction: Direction,
    dim_filter: Optional[int] = None,
) -> AugmentedDiagram:
    """Log one query and answer it; dimension restriction is free."""
    direction = tuple(Fraction(x) for x in direction)
    if is_zero(direction):
        raise InvalidInput("query direction must be nonzero")
    log.record(direction)
    dgm = compute_apd(complex_, direction)
    return dgm if dim_filter is None else dgm.restrict(dim_filter)


def query_lifted(
    log: QueryLog,
    complex_: SimplicialComplex,
    direction: Direction,
    dim_filter: Optional[int] = None,
) -> AugmentedDiagram:
    """Query against the parabolic lift; same counting rule."""
    return query(log, lift(complex_), direction, dim_filter)


class Oracle:
    """Black box answering directional APD queries for a fixed complex.

    Reconstruction code only ever sees this interface.  Results are cached by
    the primitive form of the direction; heights are rescaled exactly for the
    requested representative, so the cache never changes observable answers.
    """

    def __init__(self, complex_: SimplicialComplex):
        self._complex = complex_
        self.log = QueryLog()
        self._cache: Dict[Direction, tuple] = {}

    @property
    def ambient_dim(self) -> int:
        return self._complex.ambient_dim

    def query(self, direction, dim_filter: Optional[int] = None) -> AugmentedDiagram:
        direction = tuple(Fraction(x) for x in direction)
        if is_zero(direction):
            raise InvalidInput("query direction must be nonzero")
        if len(direction) != self._complex.ambient_dim:
            raise InvalidInput("direction has wrong ambient dimension")
        self.log.record(direction)

        canon = primitive_direction(direction)
        entry = self._cache.get(canon)
        if entry is None:
            order = index_filtration(self._complex, canon)
            heights = lower_star_heights(self._complex, canon)
            pairs, essentials = _reduce_pairs(order)
            entry = (order, pairs, essentials, heights)
            self._cache[canon] = entry
        order, pairs, essentials, heights = entry

        k = next(i for i, x in enumerate(canon) if x != 0)
        scale = direction[k] / canon[k]
        if scale != 1:
            heights = {s: scale * h for s, h in heights.items()}
        dgm = AugmentedDiagram(direction, _emit_points(order, pairs, essentials, heights))
        return dgm if dim_filter is None else dgm.restrict(dim_filter)

    def lifted(self) -> "Oracle":
        """Oracle answering for the parabolic lift, with its own log."""
        return Oracle(lift(self._complex))


# ---------------------------------------------------------------------------
# diagram text format


def format_diagram(dgm: AugmentedDiagram) -> str:
    lines = ["direction " + " ".join(format_rational(x) for x in dgm.direction)]
    for p in dgm.points:
        death = "inf" if p.essential else format_rational(p.death)
        lines.append(f"{p.dim} {format_rational(p.birth)} {death}")
    return "\n".join(lines) + "\n"
