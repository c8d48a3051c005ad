"""Weighted bisectors and the exact three-point maximin solver.

The locus of points with equal weighted distance to two weighted points is a
circle (an Apollonius circle) when the weights differ, and the perpendicular
bisector when they are equal. A point inside a triangle equidistant (in the
weighted sense) from all three vertices is the global maximin optimum on that
triangle; otherwise the optimum lies on a side, at a crossing with a bisector
pairing a side endpoint with the opposite vertex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import geom
from .geom import (Containment, DegenerateGeometryError, Point, Segment,
                   Triangle, distance)
from ._exact import orient_sign

# Weights closer than this (relatively) collapse the circle to a line.
EQUAL_WEIGHT_REL_TOL = 1e-12


@dataclass(frozen=True)
class WeightedPoint:
    id: int
    location: Point
    weight: float

    def __post_init__(self) -> None:
        if not (self.weight > 0.0 and math.isfinite(self.weight)):
            raise ValueError(f"weight must be positive and finite, got {self.weight}")


def weighted_distance(p: WeightedPoint, x: Point) -> float:
    return p.weight * distance(p.location, x)


@dataclass(frozen=True)
class CircleBisector:
    center: Point
    radius: float


@dataclass(frozen=True)
class LineBisector:
    point: Point
    direction: Point  # unit vector along the line


Bisector = CircleBisector | LineBisector


class SolutionKind(Enum):
    INTERIOR_EQUIDISTANT = "interior_equidistant"
    ON_SIDE = "on_side"


@dataclass(frozen=True)
class TriangleSolution:
    location: Point
    objective: float
    kind: SolutionKind


def apollonius_bisector(p1: WeightedPoint, p2: WeightedPoint) -> Bisector:
    """Locus of equal weighted distance to two weighted points.

    For unequal weights the circle's center lies on the line through the two
    points, beyond the heavier one, with radius w1*w2/|w1^2-w2^2| * d.
    """
    a, b = p1.location, p2.location
    if a.x == b.x and a.y == b.y:
        raise DegenerateGeometryError("bisector of coincident points")
    w1, w2 = p1.weight, p2.weight
    if abs(w1 - w2) <= EQUAL_WEIGHT_REL_TOL * max(w1, w2):
        mid = Point((a.x + b.x) / 2.0, (a.y + b.y) / 2.0)
        d = distance(a, b)
        return LineBisector(point=mid,
                            direction=Point(-(b.y - a.y) / d, (b.x - a.x) / d))
    s1, s2 = w1 * w1, w2 * w2
    denom = s1 - s2
    center = Point((s1 * a.x - s2 * b.x) / denom, (s1 * a.y - s2 * b.y) / denom)
    radius = w1 * w2 / abs(denom) * distance(a, b)
    return CircleBisector(center=center, radius=radius)


def bisector_intersections(b1: Bisector, b2: Bisector) -> list[Point]:
    """Intersection points of two bisectors (0, 1 or 2 points)."""
    if isinstance(b1, CircleBisector) and isinstance(b2, CircleBisector):
        return geom.circle_circle_intersections(b1.center, b1.radius,
                                                b2.center, b2.radius)
    if isinstance(b1, CircleBisector) and isinstance(b2, LineBisector):
        return geom.circle_line_intersections(b1.center, b1.radius,
                                              b2.point, b2.direction)
    if isinstance(b1, LineBisector) and isinstance(b2, CircleBisector):
        return geom.circle_line_intersections(b2.center, b2.radius,
                                              b1.point, b1.direction)
    assert isinstance(b1, LineBisector) and isinstance(b2, LineBisector)
    p = geom.line_line_intersection(b1.point, b1.direction, b2.point, b2.direction)
    return [] if p is None else [p]


def bisector_segment_intersections(b: Bisector, s: Segment) -> list[Point]:
    if isinstance(b, CircleBisector):
        return geom.circle_segment_intersections(b.center, b.radius, s)
    return geom.line_segment_intersections(b.point, b.direction, s)


def _objective3(points: tuple[WeightedPoint, WeightedPoint, WeightedPoint],
                x: Point) -> float:
    return min(weighted_distance(p, x) for p in points)


def _side_candidates(p1: WeightedPoint, p2: WeightedPoint,
                     p3: WeightedPoint) -> list[tuple[Point, float]]:
    """Candidate optima on the triangle sides: crossings of each side with
    the bisectors pairing a side endpoint with the opposite vertex."""
    pts = (p1, p2, p3)
    out: list[tuple[Point, float]] = []
    for i in range(3):
        a, b, c = pts[i], pts[(i + 1) % 3], pts[(i + 2) % 3]
        side = Segment(a.location, b.location)
        for bis_pair in ((a, c), (b, c)):
            bis = apollonius_bisector(*bis_pair)
            for q in bisector_segment_intersections(bis, side):
                out.append((q, _objective3(pts, q)))
    return out


def solve_triangle(p1: WeightedPoint, p2: WeightedPoint,
                   p3: WeightedPoint) -> TriangleSolution:
    """Global maximin optimum for three weighted points over their triangle.

    Builds the two bisectors sharing the smallest-weight vertex and
    intersects them; an intersection strictly inside the triangle is the
    global optimum (there is at most one). Otherwise the best side crossing
    wins.
    """
    pts = (p1, p2, p3)
    locs = tuple(p.location for p in pts)
    if orient_sign(locs[0].x, locs[0].y, locs[1].x, locs[1].y,
                   locs[2].x, locs[2].y) == 0:
        raise DegenerateGeometryError("collinear demand points")
    tri = Triangle(*locs)

    lo = min(range(3), key=lambda i: (pts[i].weight, i))
    shared = pts[lo]
    others = [pts[i] for i in range(3) if i != lo]
    b1 = apollonius_bisector(shared, others[0])
    b2 = apollonius_bisector(shared, others[1])

    best_interior: tuple[Point, float] | None = None
    for q in bisector_intersections(b1, b2):
        if geom.point_in_triangle(q, tri) is Containment.INSIDE:
            val = _objective3(pts, q)
            if best_interior is None or val > best_interior[1]:
                best_interior = (q, val)
    if best_interior is not None:
        return TriangleSolution(location=best_interior[0],
                                objective=best_interior[1],
                                kind=SolutionKind.INTERIOR_EQUIDISTANT)

    candidates = _side_candidates(p1, p2, p3)
    if not candidates:
        # Float-collapse fallback: crossings of each side with its own
        # endpoints' bisector still bound the side maxima.
        for i in range(3):
            a, b = pts[i], pts[(i + 1) % 3]
            side = Segment(a.location, b.location)
            bis = apollonius_bisector(a, b)
            for q in bisector_segment_intersections(bis, side):
                candidates.append((q, _objective3(pts, q)))
    if not candidates:
        raise DegenerateGeometryError("no side candidates found")
    loc, val = max(candidates, key=lambda item: item[1])
    return TriangleSolution(location=loc, objective=val, kind=SolutionKind.ON_SIDE)
