"""Edge reconstruction: sweep over vertices, binary search in radial wedges.

A sweep in the first frame direction visits vertices bottom to top, so every
edge below the current vertex is already known.  The edges above it are found
by binary search over an *edge interval*: a clockwise-contiguous slice of the
radial order around the vertex together with the count of true edges whose
endpoints lie in the slice.  Splitting an interval costs one diagram: the
1-indegree of the vertex in an exact separating direction counts all edges
below that direction, and subtracting the already-known ones leaves the count
for the left half; the right half follows by subtraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Set, Tuple

from .errors import NegativeCount, OracleInconsistency
from .geometry import (
    RadialOrder,
    SweepFrame,
    Vector,
    dot,
    radial_order,
    separating_direction,
    standard_frame,
    vneg,
)
from .oracle import AugmentedDiagram, Oracle


@dataclass(frozen=True)
class EdgeInterval:
    """Radial wedge record: candidate endpoints plus an edge count.

    ``candidates`` is a contiguous slice of the global radial order about
    ``vertex``, all strictly above it in the sweep direction; ``edge_count``
    of them are true edge endpoints.
    """

    vertex: int
    candidates: Tuple[int, ...]
    edge_count: int

    def __post_init__(self):
        if not 0 <= self.edge_count <= len(self.candidates):
            raise NegativeCount(
                f"edge count {self.edge_count} impossible for "
                f"{len(self.candidates)} candidates"
            )


def split_wedge(
    interval: EdgeInterval,
    known_edges: Sequence[int],
    order: RadialOrder,
    oracle: Oracle,
    points: Sequence[Vector],
) -> Tuple[EdgeInterval, EdgeInterval]:
    """Split an interval at its middle candidate into left and right halves.

    The separating direction is taken at the lower-index middle candidate
    (floor of half the size), placing the first half strictly below the
    vertex and everything radially later strictly above.  The left count is
    the 1-indegree of the vertex in that direction (dimension-0 deaths plus
    dimension-1 births at the vertex height: the k = 1 indegree formula,
    one logged query) minus the known edges falling below; the right count
    is what remains of the interval's count.

    ``known_edges`` must contain every neighbor already confirmed adjacent
    to the vertex: all below-edges plus the up-edges found so far (the loop
    invariant of the caller guarantees these cover everything radially
    before the interval).
    """
    k = len(interval.candidates)
    if k < 2 or interval.edge_count < 1:
        raise NegativeCount("split requires >= 2 candidates and >= 1 edge")
    mid = k // 2
    after_id = interval.candidates[mid - 1]
    direction = separating_direction(order, order.position(after_id))

    v_point = points[interval.vertex]
    height = dot(direction, v_point)
    dgm = oracle.query(direction)
    indegree = dgm.deaths_at(0, height) + dgm.births_at(1, height)
    below_known = sum(1 for u in known_edges if dot(direction, points[u]) < height)

    left_count = indegree - below_known
    right_count = interval.edge_count - left_count
    if left_count < 0 or right_count < 0:
        raise NegativeCount(
            f"inconsistent split counts: left={left_count} right={right_count}"
        )
    left = EdgeInterval(interval.vertex, interval.candidates[:mid], left_count)
    right = EdgeInterval(interval.vertex, interval.candidates[mid:], right_count)
    return left, right


def _above_slice(order: RadialOrder) -> Tuple[int, ...]:
    """Vertices above the center; a contiguous run of the radial order."""
    flags = [off[0] > 0 for _, off in order.ordered]
    ids = [vid for (vid, off), above in zip(order.ordered, flags) if above]
    if ids:
        first = flags.index(True)
        if any(not f for f in flags[first : first + len(ids)]):
            raise OracleInconsistency("above-vertices not contiguous in radial order")
    return tuple(ids)


def find_up_edges(
    vertex: int,
    known_below_edges: Sequence[int],
    order: RadialOrder,
    sweep_diagram: AugmentedDiagram,
    oracle: Oracle,
    points: Sequence[Vector],
    frame: SweepFrame,
) -> List[int]:
    """Endpoints of all edges adjacent to and above the vertex.

    The initial indegree is read from the shared diagram in the negated sweep
    direction (deaths in dimension 0 plus births in dimension 1 at the
    vertex's height there).  Intervals are processed left first; a zero-count
    interval is dropped, a singleton with count one emits an edge, anything
    else is split.
    """
    height_neg = -frame.height(points[vertex])
    indegree = sweep_diagram.deaths_at(0, height_neg) + sweep_diagram.births_at(
        1, height_neg
    )
    candidates = _above_slice(order)

    found: List[int] = []
    neighbors: List[int] = list(known_below_edges)
    stack: List[EdgeInterval] = []
    if indegree:
        stack.append(EdgeInterval(vertex, candidates, indegree))
    while stack:
        interval = stack.pop()
        if interval.edge_count == 0:
            continue
        if len(interval.candidates) == 1:
            if interval.edge_count != 1:
                raise NegativeCount("singleton interval with count != 1")
            endpoint = interval.candidates[0]
            found.append(endpoint)
            neighbors.append(endpoint)
            continue
        left, right = split_wedge(interval, neighbors, order, oracle, points)
        stack.append(right)
        stack.append(left)
    return found


def find_edges(
    points: Sequence[Vector],
    oracle: Oracle,
    frame: SweepFrame = None,
) -> Set[Tuple[int, int]]:
    """All edges of the unknown complex, given the vertex locations.

    One shared query in the negated sweep direction feeds every vertex's
    initial indegree; all remaining queries come from interval splits.
    """
    if frame is None:
        frame = standard_frame(oracle.ambient_dim)
    sweep_diagram = oracle.query(vneg(frame.u1))

    ids_by_height = sorted(range(len(points)), key=lambda i: frame.height(points[i]))
    edges: Set[Tuple[int, int]] = set()
    adjacency: Dict[int, List[int]] = {i: [] for i in range(len(points))}
    for vid in ids_by_height:
        others = [u for u in range(len(points)) if u != vid]
        order = radial_order(
            points[vid], [points[u] for u in others], ids=others, frame=frame
        )
        ups = find_up_edges(
            vid, adjacency[vid], order, sweep_diagram, oracle, points, frame
        )
        for u in ups:
            edges.add(tuple(sorted((vid, u))))
            adjacency[vid].append(u)
            adjacency[u].append(vid)
    return edges
