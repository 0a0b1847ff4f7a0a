"""Embedded simplicial complexes: closure, validation, on-disk format.

A simplex is a sorted tuple of distinct vertex ids; a complex stores the
embedded vertices (id -> rational point) together with a face-closed set of
simplices.  Vertex ids are dense integers 0..n0-1 so that simplex tuples are
canonical and set equality is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .errors import InvalidInput, ParseError
from .geometry import Vector, as_vector, format_rational, parse_rational

Simplex = Tuple[int, ...]


def make_simplex(vertex_ids: Iterable[int]) -> Simplex:
    ids = tuple(sorted(vertex_ids))
    if not ids:
        raise InvalidInput("empty simplex")
    if len(set(ids)) != len(ids):
        raise InvalidInput(f"duplicate vertices in simplex {ids}")
    return ids


def proper_faces(simplex: Simplex) -> List[Simplex]:
    """All nonempty proper faces, sorted by (dimension, vertex tuple)."""
    faces = []
    for size in range(1, len(simplex)):
        faces.extend(combinations(simplex, size))
    return faces


def facets(simplex: Simplex) -> List[Simplex]:
    """Codimension-one faces."""
    return [simplex[:i] + simplex[i + 1 :] for i in range(len(simplex))]


@dataclass
class SimplicialComplex:
    """Face-closed simplex set over embedded vertices.

    Immutable after construction by convention; all derived counts are
    computed on demand.
    """

    ambient_dim: int
    vertices: Dict[int, Vector]
    simplices: FrozenSet[Simplex]

    def simplices_of_dim(self, k: int) -> List[Simplex]:
        return sorted(s for s in self.simplices if len(s) == k + 1)

    @property
    def kappa(self) -> int:
        """Maximum simplex dimension (-1 for the empty complex)."""
        return max((len(s) - 1 for s in self.simplices), default=-1)

    @property
    def n(self) -> int:
        return len(self.simplices)

    def n_k(self, k: int) -> int:
        return sum(1 for s in self.simplices if len(s) == k + 1)

    def point(self, vertex_id: int) -> Vector:
        return self.vertices[vertex_id]

    def points(self, simplex: Simplex) -> List[Vector]:
        return [self.vertices[v] for v in simplex]

    def maximal_simplices(self) -> List[Simplex]:
        maximal = []
        for s in self.simplices:
            s_set = set(s)
            if not any(
                t != s and s_set < set(t) for t in self.simplices if len(t) > len(s)
            ):
                maximal.append(s)
        return sorted(maximal, key=lambda s: (len(s), s))


def build_complex(
    ambient_dim: int,
    vertex_points: Dict[int, Sequence],
    maximal_simplices: Iterable[Iterable[int]],
) -> SimplicialComplex:
    """Downward closure of the given maximal simplices.

    Idempotent when the input is already closed.  Raises InvalidInput on
    unknown vertex ids, duplicate vertices within a simplex, or a simplex of
    dimension larger than the ambient dimension.
    """
    vertices: Dict[int, Vector] = {}
    for vid, coords in vertex_points.items():
        point = as_vector(coords)
        if len(point) != ambient_dim:
            raise InvalidInput(f"vertex {vid} has {len(point)} coordinates, want {ambient_dim}")
        vertices[int(vid)] = point

    closed = {(v,) for v in vertices}
    for raw in maximal_simplices:
        simplex = make_simplex(raw)
        for v in simplex:
            if v not in vertices:
                raise InvalidInput(f"simplex {simplex} references unknown vertex {v}")
        if len(simplex) - 1 > ambient_dim:
            raise InvalidInput(f"simplex {simplex} exceeds ambient dimension {ambient_dim}")
        for size in range(1, len(simplex) + 1):
            closed.update(combinations(simplex, size))
    return SimplicialComplex(ambient_dim, vertices, frozenset(closed))


@dataclass
class GeneralPositionReport:
    """Outcome of the checkable general position assumptions.

    Affine independence of every d+1 points is not checked here; rank
    failures surface as DegeneratePosition wherever affine hulls are built.
    """

    unique_e1_heights: bool
    no_three_projected_collinear: bool
    violations: List[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.unique_e1_heights and self.no_three_projected_collinear


def validate_general_position(complex_: SimplicialComplex) -> GeneralPositionReport:
    """Check unique first-axis heights and no projected collinear triple."""
    ids = sorted(complex_.vertices)
    unique = True
    collinear_free = True
    violations: List[tuple] = []

    by_height: Dict[Fraction, int] = {}
    for vid in ids:
        h = complex_.vertices[vid][0]
        if h in by_height:
            unique = False
            violations.append(("e1-tie", by_height[h], vid))
        else:
            by_height[h] = vid

    if complex_.ambient_dim >= 2:
        proj = {vid: (complex_.vertices[vid][0], complex_.vertices[vid][1]) for vid in ids}
        for a, b, c in combinations(ids, 3):
            ax, ay = proj[a]
            bx, by = proj[b]
            cx, cy = proj[c]
            orient = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
            if orient == 0:
                collinear_free = False
                violations.append(("collinear", a, b, c))
    return GeneralPositionReport(unique, collinear_free, violations)


# ---------------------------------------------------------------------------
# text format


def serialize_complex(complex_: SimplicialComplex) -> str:
    """One-record-per-line text form; maximal simplices only."""
    lines = [f"dim {complex_.ambient_dim}", f"vertices {len(complex_.vertices)}"]
    for vid in sorted(complex_.vertices):
        coords = " ".join(format_rational(x) for x in complex_.vertices[vid])
        lines.append(f"{vid} {coords}")
    maximal = [s for s in complex_.maximal_simplices() if len(s) > 1]
    lines.append(f"simplices {len(maximal)}")
    for s in maximal:
        lines.append(" ".join(str(v) for v in s))
    return "\n".join(lines) + "\n"


def parse_complex(text: str) -> SimplicialComplex:
    """Inverse of serialize_complex; applies downward closure on load."""
    rows: List[Tuple[int, List[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    cursor = 0

    def take(expected: str) -> Tuple[int, List[str]]:
        nonlocal cursor
        if cursor >= len(rows):
            raise ParseError(f"unexpected end of file, expected {expected!r}")
        row = rows[cursor]
        cursor += 1
        return row

    lineno, tokens = take("dim")
    if len(tokens) != 2 or tokens[0] != "dim":
        raise ParseError("expected 'dim <d>'", lineno)
    try:
        ambient_dim = int(tokens[1])
    except ValueError:
        raise ParseError(f"bad dimension {tokens[1]!r}", lineno)

    lineno, tokens = take("vertices")
    if len(tokens) != 2 or tokens[0] != "vertices":
        raise ParseError("expected 'vertices <n0>'", lineno)
    n0 = int(tokens[1])

    vertex_points: Dict[int, Vector] = {}
    for _ in range(n0):
        lineno, tokens = take("vertex record")
        if len(tokens) != 1 + ambient_dim:
            raise ParseError(
                f"vertex record needs id plus {ambient_dim} coordinates", lineno
            )
        try:
            vid = int(tokens[0])
            coords = tuple(parse_rational(t) for t in tokens[1:])
        except (ValueError, InvalidInput) as exc:
            raise ParseError(str(exc), lineno)
        if vid in vertex_points:
            raise ParseError(f"duplicate vertex id {vid}", lineno)
        vertex_points[vid] = coords

    lineno, tokens = take("simplices")
    if len(tokens) != 2 or tokens[0] != "simplices":
        raise ParseError("expected 'simplices <m>'", lineno)
    m = int(tokens[1])

    maximal: List[Simplex] = []
    for _ in range(m):
        lineno, tokens = take("simplex record")
        try:
            ids = [int(t) for t in tokens]
        except ValueError:
            raise ParseError(f"bad vertex id in {tokens}", lineno)
        for v in ids:
            if v not in vertex_points:
                raise ParseError(f"simplex references unknown vertex {v}", lineno)
        maximal.append(make_simplex(ids))

    if cursor != len(rows):
        raise ParseError("trailing content", rows[cursor][0])
    try:
        return build_complex(ambient_dim, vertex_points, maximal)
    except InvalidInput as exc:
        raise ParseError(str(exc))
