"""Exact integer-arithmetic predicates for planar point sets.

Every predicate works on arbitrary-precision integer coordinates and
decides by the exact sign of a 2x2 determinant, so results depend only
on the combinatorial position of the inputs.  Degenerate inputs
(duplicate points, collinear triples) are hard errors: the game model
assumes general position and silently resolving a tie would corrupt
every computation built on top.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Point = tuple[int, int]

LEFT_CLOSED = 1
RIGHT_CLOSED = -1


class GeometryError(ValueError):
    """Base class for exact-predicate failures."""


class DuplicatePointError(GeometryError):
    pass


class CollinearTripleError(GeometryError):
    pass


class GeneralPositionError(GeometryError):
    """A point set contains a duplicate pair or a collinear triple."""


@dataclass(frozen=True)
class HalfPlane:
    """Closed half-plane bounded by the line through ``anchor`` along ``direction``.

    ``side`` is LEFT_CLOSED (+1) for the half-plane to the left of the
    directed line, RIGHT_CLOSED (-1) for the right; the boundary line
    belongs to both.
    """

    anchor: Point
    direction: Point
    side: int

    def __post_init__(self):
        if self.direction == (0, 0):
            raise GeometryError("half-plane direction must be nonzero")
        if self.side not in (LEFT_CLOSED, RIGHT_CLOSED):
            raise GeometryError(f"side must be +1 or -1, got {self.side!r}")


def cross(o: Point, a: Point, b: Point) -> int:
    """Twice the signed area of triangle (o, a, b), exactly."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orientation(p: Point, q: Point, r: Point) -> int:
    """+1 if (p, q, r) traverses counterclockwise, -1 if clockwise.

    Raises DuplicatePointError on coinciding inputs and
    CollinearTripleError when the determinant vanishes.
    """
    if p == q or p == r or q == r:
        raise DuplicatePointError(f"duplicate point among {p}, {q}, {r}")
    d = cross(p, q, r)
    if d == 0:
        raise CollinearTripleError(f"collinear triple {p}, {q}, {r}")
    return 1 if d > 0 else -1


def point_in_triangle(x: Point, y: Point, z: Point, p: Point) -> bool:
    """True iff p lies strictly inside triangle xyz.

    p is inside exactly when the four orientations xyz, xyp, xpz, pyz
    agree; duplicate/collinear errors propagate.
    """
    s = orientation(x, y, z)
    return (
        s == orientation(x, y, p)
        and s == orientation(x, p, z)
        and s == orientation(p, y, z)
    )


def in_closed_halfplane(h: HalfPlane, p: Point) -> bool:
    """True iff p lies on h's closed side (boundary included)."""
    tip = (h.anchor[0] + h.direction[0], h.anchor[1] + h.direction[1])
    d = cross(h.anchor, tip, p)
    return d == 0 or (d > 0) == (h.side == LEFT_CLOSED)


def _check_distinct(points: Sequence[Point]) -> None:
    if len(set(points)) != len(points):
        raise GeneralPositionError("point set contains duplicates")


def hull_from_sorted(points: Sequence[Point], order: Iterable[int]) -> list[int]:
    """Monotone chain over indices pre-sorted by (x, y); returns ccw hull ids.

    Assumes general position among the selected points; a zero cross
    product between hull candidates is reported as a violation.
    Interior collinearities are not examined here -- full validation is
    the cake's job at construction time.
    """
    ids = list(order)
    if len(ids) <= 2:
        return ids

    def chain(seq):
        out: list[int] = []
        for i in seq:
            while len(out) >= 2:
                d = cross(points[out[-2]], points[out[-1]], points[i])
                if d == 0:
                    raise GeneralPositionError(
                        f"collinear points at indices {out[-2]}, {out[-1]}, {i}"
                    )
                if d < 0:
                    out.pop()
                else:
                    break
            out.append(i)
        return out

    lower = chain(ids)
    upper = chain(reversed(ids))
    return lower[:-1] + upper[:-1]


def hull_vertices_ccw(points: Sequence[Point]) -> list[int]:
    """Indices of the convex hull vertices in counterclockwise order."""
    _check_distinct(points)
    order = sorted(range(len(points)), key=points.__getitem__)
    return hull_from_sorted(points, order)


def extremal_indices(points: Sequence[Point]) -> set[int]:
    """Indices of hull vertices (the extremal points): fast hull path."""
    return set(hull_vertices_ccw(points))


def extremal_indices_bruteforce(points: Sequence[Point]) -> set[int]:
    """Triangle-containment oracle for the extremal set, O(n^4).

    Index i is extremal iff point i lies inside no triangle formed by
    three other points.  This is the specification of correctness that
    the hull path must agree with; use it only at test scale.
    """
    _check_distinct(points)
    n = len(points)
    result = set(range(n))
    for i in range(n):
        others = [j for j in range(n) if j != i]
        for a in range(len(others)):
            for b in range(a + 1, len(others)):
                for c in range(b + 1, len(others)):
                    try:
                        inside = point_in_triangle(
                            points[others[a]],
                            points[others[b]],
                            points[others[c]],
                            points[i],
                        )
                    except GeometryError as exc:
                        raise GeneralPositionError(str(exc)) from exc
                    if inside:
                        result.discard(i)
                        break
                else:
                    continue
                break
            else:
                continue
            break
    return result


def strictly_inside_hull(points: Sequence[Point], p: Point) -> bool:
    """True iff p lies strictly inside the convex hull of ``points``.

    Fewer than three points span no area, so the answer is False; a p
    coinciding with a hull vertex or edge would violate general
    position and is not handled specially.
    """
    if len(points) < 3:
        return False
    hull = hull_vertices_ccw(points)
    if len(hull) < 3:
        return False
    m = len(hull)
    for t in range(m):
        a = points[hull[t]]
        b = points[hull[(t + 1) % m]]
        if cross(a, b, p) <= 0:
            return False
    return True
