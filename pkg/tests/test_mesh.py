"""Hull, Delaunay triangulation and split tests."""

import numpy as np
import pytest

from maximinloc.apollonius import WeightedPoint
from maximinloc.geom import (Containment, DegenerateGeometryError, Point,
                             Triangle, point_in_triangle,
                             signed_triangle_area)
from maximinloc.instances import generate_points
from maximinloc.mesh import (ConvexPolygon, convex_hull, delaunay,
                             split_triangle)
from maximinloc.objective import in_region


def wpoints(rng, n):
    xy = rng.uniform(0, 1, size=(n, 2))
    w = rng.uniform(1, 2, size=n)
    return tuple(WeightedPoint(id=i + 1, location=Point(*xy[i]), weight=w[i])
                 for i in range(n))


def circumcircle(t: Triangle):
    ax, ay = t.v1.x, t.v1.y
    bx, by = t.v2.x, t.v2.y
    cx, cy = t.v3.x, t.v3.y
    a2 = ax * ax + ay * ay
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
    uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
    r = np.hypot(ax - ux, ay - uy)
    return ux, uy, r


class TestConvexHull:
    def test_unit_square(self):
        poly = convex_hull([Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)])
        assert len(poly.vertices) == 4

    def test_interior_and_collinear_excluded(self):
        poly = convex_hull([Point(0, 0), Point(2, 0), Point(1, 0), Point(2, 2),
                            Point(0, 2), Point(1, 1)])
        assert len(poly.vertices) == 4

    def test_all_collinear_rejected(self):
        with pytest.raises(DegenerateGeometryError):
            convex_hull([Point(0, 0), Point(1, 1), Point(2, 2)])

    @pytest.mark.parametrize("n,sides", [(100, 9), (1000, 17)])
    def test_generated_side_counts(self, n, sides):
        pts = generate_points(n)
        poly = convex_hull([p.location for p in pts])
        assert len(poly.vertices) == sides

    def test_contains_all_inputs(self):
        rng = np.random.default_rng(41)
        pts = [Point(*xy) for xy in rng.uniform(-5, 5, size=(300, 2))]
        poly = convex_hull(pts)
        for p in pts:
            assert in_region(p, poly) is not Containment.OUTSIDE

    def test_counterclockwise(self):
        rng = np.random.default_rng(43)
        pts = [Point(*xy) for xy in rng.uniform(0, 1, size=(50, 2))]
        poly = convex_hull(pts)
        assert poly.area > 0


class TestDelaunay:
    def test_square_corners_two_triangles(self):
        pts = tuple(WeightedPoint(id=i + 1, location=Point(*xy), weight=1.0)
                    for i, xy in enumerate([(0, 0), (1, 0), (1, 1), (0, 1)]))
        tri = delaunay(pts)
        assert tri.count == 2

    @pytest.mark.parametrize("n,count", [(100, 189), (500, 985)])
    def test_generated_triangle_counts(self, n, count):
        tri = delaunay(generate_points(n))
        assert tri.count == count

    def test_empty_circumcircle_brute_force(self):
        rng = np.random.default_rng(47)
        batches = [wpoints(rng, 60) for _ in range(5)]
        batches.append(generate_points(200))
        for pts in batches:
            tri = delaunay(pts)
            xs = np.array([p.location.x for p in pts])
            ys = np.array([p.location.y for p in pts])
            for face in tri.triangles:
                ux, uy, r = circumcircle(face.triangle)
                d = np.hypot(xs - ux, ys - uy)
                slack = np.minimum(d - r, 0.0)
                assert np.all(slack >= -1e-9 * r)

    def test_area_sum_matches_hull(self):
        rng = np.random.default_rng(53)
        for trial in range(5):
            pts = wpoints(rng, 120)
            tri = delaunay(pts)
            total = sum(abs(signed_triangle_area(*f.triangle.vertices))
                        for f in tri.triangles)
            hull = convex_hull([p.location for p in pts])
            assert abs(total - hull.area) <= 1e-9 * hull.area

    def test_generated_area_sum(self):
        pts = generate_points(300)
        tri = delaunay(pts)
        total = sum(abs(signed_triangle_area(*f.triangle.vertices))
                    for f in tri.triangles)
        hull = convex_hull([p.location for p in pts])
        assert abs(total - hull.area) <= 1e-9 * hull.area

    def test_ids_index_the_input(self):
        pts = generate_points(50)
        tri = delaunay(pts)
        for face in tri.triangles:
            for pos, vert in zip(face.ids, face.triangle.vertices):
                assert pts[pos].location == vert

    def test_duplicate_locations_rejected(self):
        pts = (WeightedPoint(1, Point(0, 0), 1.0),
               WeightedPoint(2, Point(1, 0), 1.0),
               WeightedPoint(3, Point(1, 0), 1.0),
               WeightedPoint(4, Point(0, 1), 1.0))
        with pytest.raises(DegenerateGeometryError):
            delaunay(pts)

    def test_collinear_rejected(self):
        pts = tuple(WeightedPoint(id=i, location=Point(i * 1.0, i * 2.0), weight=1.0)
                    for i in range(1, 5))
        with pytest.raises(DegenerateGeometryError):
            delaunay(pts)

    def test_deterministic(self):
        pts = generate_points(200)
        t1 = delaunay(pts)
        t2 = delaunay(pts)
        assert [f.ids for f in t1.triangles] == [f.ids for f in t2.triangles]


class TestSplitTriangle:
    def test_midpoint_children(self):
        t = Triangle(Point(0, 0), Point(1, 0), Point(0, 1))
        kids = split_triangle(t)
        assert len(kids) == 4
        medial = kids[3]
        got = {(p.x, p.y) for p in medial.vertices}
        assert got == {(0.5, 0.0), (0.5, 0.5), (0.0, 0.5)}

    def test_children_quarter_area(self):
        rng = np.random.default_rng(59)
        for _ in range(300):
            xy = rng.uniform(-10, 10, 6)
            try:
                t = Triangle(Point(xy[0], xy[1]), Point(xy[2], xy[3]),
                             Point(xy[4], xy[5]))
            except DegenerateGeometryError:
                continue
            parent = abs(signed_triangle_area(*t.vertices))
            kids = split_triangle(t)
            total = sum(abs(signed_triangle_area(*k.vertices)) for k in kids)
            assert abs(total - parent) <= 1e-12 * parent
            for k in kids:
                assert abs(abs(signed_triangle_area(*k.vertices)) - parent / 4) \
                    <= 1e-9 * parent

    def test_children_tile_parent(self):
        rng = np.random.default_rng(61)
        t = Triangle(Point(0, 0), Point(3, 1), Point(1, 2.5))
        kids = split_triangle(t)
        for _ in range(2000):
            l1, l2 = rng.uniform(0.05, 0.9, 2)
            if l1 + l2 >= 0.95:
                continue
            l3 = 1 - l1 - l2
            p = Point(l1 * 0 + l2 * 3 + l3 * 1, l1 * 0 + l2 * 1 + l3 * 2.5)
            holders = [k for k in kids
                       if point_in_triangle(p, k) is Containment.INSIDE]
            boundary = [k for k in kids
                        if point_in_triangle(p, k) is Containment.ON_BOUNDARY]
            if boundary:
                continue
            assert len(holders) == 1


class TestConvexPolygon:
    def test_square_properties(self):
        poly = ConvexPolygon(vertices=(Point(0, 0), Point(10, 0),
                                       Point(10, 10), Point(0, 10)))
        assert poly.area == 100.0
        assert poly.diameter == np.hypot(10, 10)
        assert poly.bounds == (0.0, 0.0, 10.0, 10.0)
        assert len(poly.sides) == 4

    def test_clockwise_rejected(self):
        with pytest.raises(ValueError):
            ConvexPolygon(vertices=(Point(0, 0), Point(0, 1), Point(1, 1),
                                    Point(1, 0)))

    def test_too_few_vertices_rejected(self):
        with pytest.raises(DegenerateGeometryError):
            ConvexPolygon(vertices=(Point(0, 0), Point(1, 0)))
