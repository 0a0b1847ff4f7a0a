"""Exact rational linear algebra and direction construction.

All coordinates, heights and directions are ``fractions.Fraction`` values, so
every predicate in the library is exact.  Directions are *not* normalized:
only the ordering and equality of dot products ever matters, and both are
invariant under positive scaling.  This keeps the whole pipeline inside the
rationals (no square roots).

Vectors and directions are plain tuples of Fractions, which makes them
hashable (useful for caching) and trivially immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import (
    DegeneratePosition,
    InvalidInput,
    ParallelDirections,
    PreconditionViolated,
)

Vector = Tuple[Fraction, ...]
Direction = Tuple[Fraction, ...]


# ---------------------------------------------------------------------------
# basic vector helpers


def as_vector(coords: Iterable) -> Vector:
    """Coerce an iterable of ints/strings/Fractions into a Vector."""
    return tuple(Fraction(c) for c in coords)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise InvalidInput(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def vsub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vadd(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vneg(a: Vector) -> Vector:
    return tuple(-x for x in a)


def vscale(t: Fraction, a: Vector) -> Vector:
    return tuple(t * x for x in a)


def basis_vector(dim: int, index: int) -> Direction:
    return tuple(Fraction(1 if i == index else 0) for i in range(dim))


def is_zero(a: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in a)


def parallel(a: Sequence[Fraction], b: Sequence[Fraction]) -> bool:
    """True iff a and b are linearly dependent (checks all 2x2 minors)."""
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] * b[j] != a[j] * b[i]:
                return False
    return True


def primitive_direction(d: Sequence[Fraction]) -> Direction:
    """Scale a direction by a positive rational to primitive integer form.

    The orientation is preserved; scaled duplicates map to the same tuple.
    """
    if is_zero(d):
        raise InvalidInput("zero vector has no direction")
    denom_lcm = 1
    for x in d:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in d]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(Fraction(v // g) for v in ints)


def format_rational(x: Fraction) -> str:
    """Lowest-terms text form: "p/q", or "p" when q == 1."""
    return str(Fraction(x))


def parse_rational(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"not a rational: {token!r}") from exc


# ---------------------------------------------------------------------------
# exact linear solving (internal)


def _rref(rows: List[List[Fraction]]) -> Tuple[List[List[Fraction]], List[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        if r == len(rows):
            break
        pr = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return rows, pivots


def _solve_particular(
    equations: List[Tuple[Sequence[Fraction], Fraction]], dim: int
) -> Optional[List[Fraction]]:
    """One exact solution of ``coeffs . x = rhs`` rows, or None if inconsistent.

    Free variables are set to zero, so the result is deterministic.
    """
    aug = [list(coeffs) + [Fraction(rhs)] for coeffs, rhs in equations]
    aug, pivots = _rref(aug)
    if any(p == dim for p in pivots):  # pivot in the rhs column
        return None
    x = [Fraction(0)] * dim
    for row, col in zip(aug, pivots):
        x[col] = row[dim]
    return x


# ---------------------------------------------------------------------------
# direction constructions


def orthogonal_to_affine_hull(points: Sequence[Vector]) -> Direction:
    """A direction with equal dot product against every input point.

    Single Gram-Schmidt-style elimination: row-reduce the difference vectors
    and return the canonical kernel vector of the first free column, rescaled
    to primitive integer form.  Raises DegeneratePosition if the points are
    affinely dependent or already span the whole space.
    """
    if not points:
        raise InvalidInput("need at least one point")
    dim = len(points[0])
    diffs = [list(vsub(p, points[0])) for p in points[1:]]
    diffs, pivots = _rref(diffs)
    if len(pivots) < len(diffs):
        raise DegeneratePosition("points are affinely dependent")
    free = [c for c in range(dim) if c not in pivots]
    if not free:
        raise DegeneratePosition("points affinely span the whole space")
    j = free[0]
    z = [Fraction(0)] * dim
    z[j] = Fraction(1)
    for row, col in zip(diffs, pivots):
        z[col] = -row[j]
    return primitive_direction(z)


def second_perpendicular_direction(
    all_points: Sequence[Vector],
    subset_v: Sequence[Vector],
    subset_w: Sequence[Vector],
    s: Direction,
) -> Direction:
    """Direction orthogonal to aff(W) placing W strictly below V \\ W.

    Preconditions (W subset of V subset of all_points): s is orthogonal to
    aff(V), V is affinely independent, and under s the points of V are height
    separated from every other point of ``all_points``.  The returned s' is
    orthogonal to both aff(W) and s, with ``s'.x - s'.w == 1`` exactly for
    every w in W, x in V \\ W (solved as a linear system, which also makes the
    choice deterministic).
    """
    v_set = {tuple(p) for p in subset_v}
    w_set = {tuple(p) for p in subset_w}
    if not w_set <= v_set:
        raise InvalidInput("W must be a subset of V")
    dim = len(s)
    if not subset_w:
        return basis_vector(dim, 0)
    if w_set == v_set:
        return tuple(s)

    height = dot(s, subset_v[0])
    for p in all_points:
        if tuple(p) not in v_set and dot(s, p) == height:
            raise PreconditionViolated("s does not height-separate V from the rest")

    w0 = subset_w[0]
    equations: List[Tuple[Sequence[Fraction], Fraction]] = []
    for w in subset_w[1:]:
        equations.append((vsub(w, w0), Fraction(0)))
    equations.append((s, Fraction(0)))
    for x in subset_v:
        if tuple(x) not in w_set:
            equations.append((vsub(x, w0), Fraction(1)))
    solution = _solve_particular(equations, dim)
    if solution is None or is_zero(solution):
        raise DegeneratePosition("V u {v - s} is affinely dependent")
    return primitive_direction(solution)


def leftmost_crossing(
    heights: Sequence[Fraction], heights_prime: Sequence[Fraction]
) -> Optional[Fraction]:
    """Smallest t in (0, 1] where two of the interpolation segments cross.

    The segments join (0, h) to (1, h') for every pairing h in H, h' in H'.
    The minimum is attained by the closest distinct heights of H against the
    extreme heights of H', which is what is computed here; tests check the
    equivalence against full pair enumeration.  Returns None when H carries
    fewer than two distinct values (no crossing in (0, 1]).
    """
    if not heights or not heights_prime:
        raise InvalidInput("height lists must be nonempty")
    distinct = sorted(set(heights))
    if len(distinct) < 2:
        return None
    min_gap = min(b - a for a, b in zip(distinct, distinct[1:]))
    spread = max(heights_prime) - min(heights_prime)
    return min_gap / (min_gap + spread)


def tilt(
    heights: Sequence[Fraction],
    heights_prime: Sequence[Fraction],
    s: Direction,
    s_prime: Direction,
) -> Direction:
    """The tilt from s towards s': ``(1 - eps) * s + eps * s'``.

    eps is half the leftmost segment crossing of the two height lists (1/2
    when there is none), so heights that are distinct under s keep their
    order, while ties under s are broken by the s' order.
    """
    if parallel(s, s_prime):
        raise ParallelDirections("tilt requires linearly independent directions")
    crossing = leftmost_crossing(heights, heights_prime)
    eps = Fraction(1, 2) if crossing is None else crossing / 2
    return tuple((1 - eps) * a + eps * b for a, b in zip(s, s_prime))


# ---------------------------------------------------------------------------
# radial machinery in the sweep plane


@dataclass(frozen=True)
class SweepFrame:
    """Orthogonal direction pair spanning the projection plane of the sweep.

    The default frame is (e1, e2), matching projection onto coordinates
    (1, 2); the fallback basis built when e1 heights collide swaps in the
    tilted pair (b1, b2).  Offsets are measured by dot products with the two
    frame vectors, which preserves all sign-of-cross-product reasoning.
    """

    u1: Direction
    u2: Direction

    def height(self, v: Vector) -> Fraction:
        return dot(self.u1, v)

    def project(self, v: Vector) -> Tuple[Fraction, Fraction]:
        return (dot(self.u1, v), dot(self.u2, v))

    def embed(self, a: Fraction, b: Fraction) -> Direction:
        return tuple(a * x + b * y for x, y in zip(self.u1, self.u2))


def standard_frame(dim: int) -> SweepFrame:
    if dim < 2:
        raise InvalidInput("sweep frame needs ambient dimension >= 2")
    return SweepFrame(basis_vector(dim, 0), basis_vector(dim, 1))


def _angle_group(u: Tuple[Fraction, Fraction]) -> int:
    # group 0: angle in (0, pi]; group 1: angle in (-pi, 0]
    x, y = u
    return 0 if (y > 0 or (y == 0 and x < 0)) else 1


def _cross2(a: Tuple[Fraction, Fraction], b: Tuple[Fraction, Fraction]) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def _clockwise_cmp(a: Tuple[Fraction, Fraction], b: Tuple[Fraction, Fraction]) -> int:
    """Order by strictly descending angle over (-pi, pi]."""
    ga, gb = _angle_group(a), _angle_group(b)
    if ga != gb:
        return -1 if ga < gb else 1
    c = _cross2(a, b)
    if c < 0:
        return -1
    if c > 0:
        return 1
    return 0


@dataclass(frozen=True)
class RadialOrder:
    """Vertices sorted clockwise about a center in the sweep plane.

    ``ordered`` holds (vertex id, projected offset) pairs, sorted by
    descending angle over (-pi, pi]; the first entry is the upper-left-most
    offset.  Offsets are pairwise non-parallel (no three projected collinear
    points), so the order is strict.
    """

    center: Vector
    ordered: Tuple[Tuple[int, Tuple[Fraction, Fraction]], ...]
    frame: SweepFrame = field(compare=False)

    def position(self, vertex_id: int) -> int:
        for i, (vid, _) in enumerate(self.ordered):
            if vid == vertex_id:
                return i
        raise InvalidInput(f"vertex {vertex_id} not in radial order")


def radial_order(
    center: Vector,
    others: Sequence[Vector],
    ids: Optional[Sequence[int]] = None,
    frame: Optional[SweepFrame] = None,
) -> RadialOrder:
    """Sort vertices clockwise around the projected center, exactly.

    Comparisons use quadrant tests plus sign-of-cross-product only.  Raises
    DegeneratePosition when two projected offsets are parallel (which covers
    coincident projections).
    """
    if frame is None:
        frame = standard_frame(len(center))
    if ids is None:
        ids = list(range(len(others)))
    c2 = frame.project(center)
    offsets = []
    for vid, p in zip(ids, others):
        p2 = frame.project(p)
        off = (p2[0] - c2[0], p2[1] - c2[1])
        if off == (0, 0):
            raise DegeneratePosition(f"vertex {vid} projects onto the center")
        offsets.append((vid, off))
    for i in range(len(offsets)):
        for j in range(i + 1, len(offsets)):
            if _cross2(offsets[i][1], offsets[j][1]) == 0:
                raise DegeneratePosition(
                    f"projected offsets of {offsets[i][0]} and {offsets[j][0]} are parallel"
                )
    ordered = sorted(offsets, key=cmp_to_key(lambda a, b: _clockwise_cmp(a[1], b[1])))
    return RadialOrder(tuple(center), tuple(ordered), frame)


def separating_direction(order: RadialOrder, after_index: int) -> Direction:
    """Direction of the sweep plane splitting the order after ``after_index``.

    Works over the signed offsets (each u and -u), picking the angular gap
    immediately clockwise of the offset at ``after_index``; a strictly
    interior rational direction of that gap is rotated by exactly -90 degrees
    and sign-fixed so the offset at ``after_index`` lands strictly below the
    center.  No vertex of the order can tie with the center because the gap
    contains no signed offset.
    """
    if not order.ordered:
        raise InvalidInput("empty radial order")
    if not 0 <= after_index < len(order.ordered):
        raise InvalidInput("after_index out of range")

    signed: List[Tuple[Tuple[Fraction, Fraction], int, int]] = []
    for i, (_, off) in enumerate(order.ordered):
        signed.append((off, i, +1))
        signed.append(((-off[0], -off[1]), i, -1))
    signed.sort(key=cmp_to_key(lambda a, b: _clockwise_cmp(a[0], b[0])))

    pos = next(
        i for i, (_, idx, sign) in enumerate(signed) if idx == after_index and sign == +1
    )
    u_a = signed[pos][0]
    u_b = signed[(pos + 1) % len(signed)][0]

    c = _cross2(u_a, u_b)
    if c < 0:  # gap < pi
        interior = (u_a[0] + u_b[0], u_a[1] + u_b[1])
    elif c > 0:  # gap > pi (cannot happen once offsets are doubled)
        interior = (-(u_a[0] + u_b[0]), -(u_a[1] + u_b[1]))
    else:  # gap == pi: u_b is the antipode of u_a
        interior = (u_a[1], -u_a[0])

    s2 = (interior[1], -interior[0])
    below = u_a[0] * s2[0] + u_a[1] * s2[1]
    if below == 0:
        raise DegeneratePosition("separating direction degenerate")  # unreachable
    if below > 0:
        s2 = (-s2[0], -s2[1])
    return order.frame.embed(s2[0], s2[1])
