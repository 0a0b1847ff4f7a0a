"""Vertex reconstruction from zero-dimensional diagram queries.

The oracle's dimension-0 births in a direction are exactly the vertex
heights there.  Tilting the sweep axis towards each remaining coordinate
axis keeps the vertex order fixed, so sorted birth lists can be matched
index by index and solved for one coordinate at a time.  The standard run
uses 2d - 1 queries; when first-axis heights collide, a tilted basis is
built first at the cost of 2 extra queries.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import GeneralPositionViolated, OracleInconsistency
from .geometry import (
    Direction,
    SweepFrame,
    Vector,
    basis_vector,
    leftmost_crossing,
    standard_frame,
    tilt,
)
from .oracle import Oracle

# one recovered column per coordinate axis, rows aligned by sweep order
CoordinateTable = List[List[Fraction]]


def find_coordinate(
    i: int,
    base_heights: List[Fraction],
    oracle: Oracle,
    base_direction: Optional[Direction] = None,
    target_births: Optional[List[Fraction]] = None,
) -> List[Fraction]:
    """Recover coordinate i of every vertex, aligned with the base order.

    ``base_heights`` are the strictly increasing vertex heights in the base
    direction (e1 unless a tilted basis is in play).  The tilt s_t towards
    e_i preserves that order, so the j-th sorted birth of Dgm0(s_t) belongs
    to the j-th vertex and, writing s_t = (1-eps) * base + eps * e_i,

        x_i[j] = (H_t[j] - (1-eps) * base_heights[j]) / eps.

    Two logged queries unless the e_i births are passed in.
    """
    d = oracle.ambient_dim
    if not 1 <= i <= d:
        raise OracleInconsistency(f"coordinate index {i} out of range")
    e_i = basis_vector(d, i - 1)
    if base_direction is None:
        base_direction = basis_vector(d, 0)
    if target_births is None:
        target_births = oracle.query(e_i, 0).births(0)
    if len(target_births) != len(base_heights):
        raise OracleInconsistency("birth counts differ between directions")

    crossing = leftmost_crossing(base_heights, target_births) if base_heights else None
    eps = Fraction(1, 2) if crossing is None else crossing / 2
    s_t = tuple((1 - eps) * a + eps * b for a, b in zip(base_direction, e_i))

    tilted_births = oracle.query(s_t, 0).births(0)
    if len(tilted_births) != len(base_heights):
        raise OracleInconsistency("birth counts differ between directions")
    return [
        (ht - (1 - eps) * hb) / eps for ht, hb in zip(tilted_births, base_heights)
    ]


def create_unique_height_basis(oracle: Oracle) -> List[Direction]:
    """Orthogonal rational basis whose first vector separates all vertices.

    b1 is the tilt of e1 towards e2 built from their dimension-0 births, so
    e1 ties are broken by e2 heights (distinct projected vertices); b2 is the
    exact -90 degree rotation of b1 inside the (e1, e2) plane; the remaining
    axes stay standard.  Two logged queries.
    """
    d = oracle.ambient_dim
    e1, e2 = basis_vector(d, 0), basis_vector(d, 1)
    h1 = oracle.query(e1, 0).births(0)
    h2 = oracle.query(e2, 0).births(0)
    b1 = tilt(h1, h2, e1, e2)
    b2 = (b1[1], -b1[0]) + tuple(Fraction(0) for _ in range(d - 2))
    return [b1, b2] + [basis_vector(d, j) for j in range(2, d)]


def vertex_stage(
    oracle: Oracle, strict: bool = True
) -> Tuple[List[Vector], SweepFrame]:
    """Recover all vertex locations plus the sweep frame for later stages.

    Returns points sorted by increasing sweep height (first axis in the
    standard run).  With ``strict`` a first-axis height collision raises
    GeneralPositionViolated; otherwise the run switches to the tilted basis
    of create_unique_height_basis, reusing the diagrams already queried.
    """
    d = oracle.ambient_dim
    e1 = basis_vector(d, 0)
    births1 = oracle.query(e1, 0).births(0)

    if len(set(births1)) == len(births1):
        columns: CoordinateTable = [births1]
        for i in range(2, d + 1):
            columns.append(find_coordinate(i, births1, oracle))
        points = [tuple(col[j] for col in columns) for j in range(len(births1))]
        return points, standard_frame(d)

    if strict:
        raise GeneralPositionViolated("duplicate vertex heights in direction e1")

    e2 = basis_vector(d, 1)
    births2 = oracle.query(e2, 0).births(0)
    b1 = tilt(births1, births2, e1, e2)
    b2 = (b1[1], -b1[0]) + tuple(Fraction(0) for _ in range(d - 2))
    base_births = oracle.query(b1, 0).births(0)
    if len(set(base_births)) != len(base_births):
        raise GeneralPositionViolated(
            "two vertices share a projection onto the (e1, e2) plane"
        )

    columns = []
    for i in range(1, d + 1):
        known = births1 if i == 1 else births2 if i == 2 else None
        columns.append(
            find_coordinate(i, base_births, oracle, base_direction=b1, target_births=known)
        )
    points = [tuple(col[j] for col in columns) for j in range(len(base_births))]
    return points, SweepFrame(b1, b2)


def find_vertices(oracle: Oracle, strict: bool = True) -> List[Vector]:
    """All vertex locations, sorted by sweep height; 2d - 1 logged queries."""
    points, _ = vertex_stage(oracle, strict)
    return points
