"""Planar geometry primitives: rigid frame transforms, circle and line
intersections, signed areas and triangle containment.

All intersection routines work in a translated/rotated frame in which the
reference segment lies on the x-axis, so no trigonometric functions are ever
evaluated; results are mapped back with the inverse transform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from ._exact import orient_sign

FRAME_UNIT_TOL = 1e-12
# Circles count as tangent when the discriminant is this close to zero,
# relative to the squared center distance.
TANGENT_REL_TOL = 1e-12
# Segment containment: the segment parameter may leave [0, 1] by this much.
SEGMENT_PARAM_TOL = 1e-12
# Triangle containment: a sub-area term this small (relative to the triangle
# area) puts the point on the boundary.
TRIANGLE_BOUNDARY_TOL = 1e-12


class DegenerateGeometryError(ValueError):
    """A geometric object collapsed: coincident points, collinear triangle."""


class Containment(Enum):
    INSIDE = "inside"
    ON_BOUNDARY = "on_boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates ({self.x}, {self.y})")


def distance(a: Point, b: Point) -> float:
    # explicit sqrt keeps this bitwise-consistent with the compiled kernels
    dx = b.x - a.x
    dy = b.y - a.y
    return math.sqrt(dx * dx + dy * dy)


@dataclass(frozen=True)
class FrameTransform:
    """Rigid motion taking an anchor point to the origin and a second point
    to (separation, 0) on the x-axis."""

    origin: Point
    cosine: float
    sine: float
    separation: float

    def __post_init__(self) -> None:
        if abs(self.cosine * self.cosine + self.sine * self.sine - 1.0) > FRAME_UNIT_TOL:
            raise ValueError("frame rotation is not orthonormal")
        if not (self.separation >= 0.0):
            raise ValueError("frame separation must be >= 0")


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self) -> None:
        if self.a.x == self.b.x and self.a.y == self.b.y:
            raise DegenerateGeometryError("segment endpoints coincide")

    @property
    def length(self) -> float:
        return distance(self.a, self.b)


@dataclass(frozen=True)
class Triangle:
    v1: Point
    v2: Point
    v3: Point

    def __post_init__(self) -> None:
        # Sign decided exactly; near-degenerate float triangles are legal as
        # long as they have nonzero area as exact rationals.
        if orient_sign(self.v1.x, self.v1.y, self.v2.x, self.v2.y,
                       self.v3.x, self.v3.y) == 0:
            raise DegenerateGeometryError("collinear triangle vertices")

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.v1, self.v2, self.v3)

    @property
    def centroid(self) -> Point:
        return Point((self.v1.x + self.v2.x + self.v3.x) / 3.0,
                     (self.v1.y + self.v2.y + self.v3.y) / 3.0)

    @property
    def sides(self) -> tuple[Segment, Segment, Segment]:
        return (Segment(self.v1, self.v2),
                Segment(self.v2, self.v3),
                Segment(self.v3, self.v1))


def make_frame(a1: Point, a2: Point) -> FrameTransform:
    """Frame in which a1 maps to (0, 0) and a2 maps to (d, 0)."""
    if a1.x == a2.x and a1.y == a2.y:
        raise DegenerateGeometryError("cannot build a frame from coincident points")
    d = distance(a1, a2)
    return FrameTransform(origin=a1, cosine=(a2.x - a1.x) / d,
                          sine=(a2.y - a1.y) / d, separation=d)


def to_frame(t: FrameTransform, p: Point) -> Point:
    dx = p.x - t.origin.x
    dy = p.y - t.origin.y
    return Point(t.cosine * dx + t.sine * dy, -t.sine * dx + t.cosine * dy)


def from_frame(t: FrameTransform, p: Point) -> Point:
    return Point(t.origin.x + t.cosine * p.x - t.sine * p.y,
                 t.origin.y + t.sine * p.x + t.cosine * p.y)


def circle_circle_intersections(c1: Point, r1: float, c2: Point,
                                r2: float) -> list[Point]:
    """Intersection points of two circles, in the original frame.

    Tangent circles yield a single point; disjoint, nested or concentric
    circles yield an empty list.
    """
    if c1.x == c2.x and c1.y == c2.y:
        return []
    dx = c2.x - c1.x
    dy = c2.y - c1.y
    d2 = dx * dx + dy * dy  # unrounded, matching the compiled kernels
    frame = make_frame(c1, c2)
    d = frame.separation
    disc = ((r1 + r2) * (r1 + r2) - d2) * (d2 - (r1 - r2) * (r1 - r2))
    tol = TANGENT_REL_TOL * d2
    if disc < -tol:
        return []
    x = (r1 * r1 + d2 - r2 * r2) / (2.0 * d)
    if disc <= tol:
        return [from_frame(frame, Point(x, 0.0))]
    y = math.sqrt(disc) / (2.0 * d)
    return [from_frame(frame, Point(x, y)), from_frame(frame, Point(x, -y))]


def circle_line_intersections(center: Point, radius: float, anchor: Point,
                              direction: Point) -> list[Point]:
    """Intersections of a circle with the infinite line through `anchor`
    with unit `direction`."""
    far = Point(anchor.x + direction.x, anchor.y + direction.y)
    frame = make_frame(anchor, far)
    c = to_frame(frame, center)
    disc = (radius - c.y) * (radius + c.y)
    tol = TANGENT_REL_TOL * radius * radius
    if disc < -tol:
        return []
    if disc <= tol:
        return [from_frame(frame, Point(c.x, 0.0))]
    h = math.sqrt(disc)
    return [from_frame(frame, Point(c.x - h, 0.0)),
            from_frame(frame, Point(c.x + h, 0.0))]


def circle_segment_intersections(center: Point, radius: float,
                                 s: Segment) -> list[Point]:
    """Intersections of a circle with a segment; only points whose segment
    parameter lies in [0, 1] (within tolerance) are kept."""
    frame = make_frame(s.a, s.b)
    d = frame.separation
    c = to_frame(frame, center)
    disc = (radius - c.y) * (radius + c.y)
    tol = TANGENT_REL_TOL * radius * radius
    if disc < -tol:
        return []
    if disc <= tol:
        xs = [c.x]
    else:
        h = math.sqrt(disc)
        xs = [c.x - h, c.x + h]
    lo = -SEGMENT_PARAM_TOL * d
    hi = d + SEGMENT_PARAM_TOL * d
    return [from_frame(frame, Point(x, 0.0)) for x in xs if lo <= x <= hi]


def line_line_intersection(anchor1: Point, dir1: Point, anchor2: Point,
                           dir2: Point) -> Point | None:
    """Intersection of two infinite lines, or None when parallel."""
    denom = dir1.x * dir2.y - dir1.y * dir2.x
    if denom == 0.0:
        return None
    t = ((anchor2.x - anchor1.x) * dir2.y - (anchor2.y - anchor1.y) * dir2.x) / denom
    return Point(anchor1.x + t * dir1.x, anchor1.y + t * dir1.y)


def line_segment_intersections(anchor: Point, direction: Point,
                               s: Segment) -> list[Point]:
    """Intersection of an infinite line with a segment (0 or 1 points)."""
    ex = s.b.x - s.a.x
    ey = s.b.y - s.a.y
    denom = direction.x * ey - direction.y * ex
    if denom == 0.0:
        return []
    # Solve anchor + t*direction = s.a + u*(s.b - s.a) for u.
    u = ((s.a.x - anchor.x) * direction.y - (s.a.y - anchor.y) * direction.x) / denom
    if -SEGMENT_PARAM_TOL <= u <= 1.0 + SEGMENT_PARAM_TOL:
        return [Point(s.a.x + u * ex, s.a.y + u * ey)]
    return []


def signed_triangle_area(a: Point, b: Point, c: Point) -> float:
    """Signed area: positive when a, b, c are counterclockwise.

    The cross-product form makes swapping two vertices an exact negation.
    """
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y))


def point_in_triangle(p: Point, t: Triangle) -> Containment:
    """Classify a point against a triangle via the signs of the three
    point-vertex-vertex sub-areas; a vanishing term means the point sits on
    the corresponding side."""
    area = abs(signed_triangle_area(t.v1, t.v2, t.v3))
    tol = TRIANGLE_BOUNDARY_TOL * (1.0 + area)
    verts = t.vertices
    pos = neg = zero = False
    for i in range(3):
        a = verts[(i + 1) % 3]
        b = verts[(i + 2) % 3]
        term = (a.x - p.x) * (b.y - p.y) - (b.x - p.x) * (a.y - p.y)
        if abs(term) <= tol:
            zero = True
        elif term > 0.0:
            pos = True
        else:
            neg = True
    if pos and neg:
        return Containment.OUTSIDE
    if zero:
        return Containment.ON_BOUNDARY
    return Containment.INSIDE
