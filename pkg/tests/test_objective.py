"""Objective evaluation and feasibility tests."""

import numpy as np
import pytest

from maximinloc.apollonius import WeightedPoint
from maximinloc.geom import Containment, Point
from maximinloc.instances import generate_points, make_instance, square_region
from maximinloc.objective import Instance, evaluate, in_region


def small_instance():
    # the weight-2 point at the origin decides the minimum near (3, 4)
    pts = (WeightedPoint(1, Point(0, 0), 2.0),
           WeightedPoint(2, Point(100, 0), 1.0),
           WeightedPoint(3, Point(0, 100), 1.0))
    return make_instance(pts, region="hull")


class TestEvaluate:
    def test_single_closest_point(self):
        inst = small_instance()
        # distance 5 from the weight-2 point dominates at (3, 4)
        assert evaluate(Point(3, 4), inst) == pytest.approx(10.0, abs=1e-12)

    def test_zero_at_demand_point(self):
        inst = small_instance()
        assert evaluate(Point(0, 0), inst) == 0.0

    def test_reference_optimum_value(self):
        inst = make_instance(generate_points(100), region="hull")
        assert evaluate(Point(8.04233, 9.83530), inst) == pytest.approx(
            2.13972, abs=1e-4)

    def test_pruned_iff_below_incumbent(self):
        rng = np.random.default_rng(67)
        inst = make_instance(generate_points(50), region="hull")
        for _ in range(10_000):
            p = Point(*rng.uniform(0, 10, 2))
            incumbent = float(rng.uniform(0, 3))
            full = evaluate(p, inst)
            got = evaluate(p, inst, incumbent=incumbent)
            if full < incumbent:
                assert got is None
            else:
                assert got == full

    def test_tie_with_incumbent_not_pruned(self):
        inst = small_instance()
        v = evaluate(Point(3, 4), inst)
        assert evaluate(Point(3, 4), inst, incumbent=v) == v

    def test_lipschitz_bound(self):
        rng = np.random.default_rng(71)
        inst = make_instance(generate_points(40), region="hull")
        wmax = float(np.max(inst.ws))
        for _ in range(2000):
            p = Point(*rng.uniform(0, 10, 2))
            q = Point(*rng.uniform(0, 10, 2))
            lhs = abs(evaluate(p, inst) - evaluate(q, inst))
            rhs = wmax * np.hypot(p.x - q.x, p.y - q.y)
            assert lhs <= rhs + 1e-12

    def test_zero_only_at_demand_points(self):
        inst = make_instance(generate_points(20), region="hull")
        for p in inst.points:
            assert evaluate(p.location, inst) == 0.0
        assert evaluate(Point(5.000001, 5.000001), inst) > 0.0


class TestInRegion:
    square = square_region(1.0)

    def test_inside(self):
        assert in_region(Point(0.5, 0.5), self.square) is Containment.INSIDE

    def test_boundary(self):
        assert in_region(Point(1.0, 0.5), self.square) is Containment.ON_BOUNDARY

    def test_outside(self):
        assert in_region(Point(2.0, 0.0), self.square) is Containment.OUTSIDE

    def test_corner(self):
        assert in_region(Point(0.0, 0.0), self.square) is Containment.ON_BOUNDARY


class TestInstance:
    def test_requires_three_points(self):
        pts = (WeightedPoint(1, Point(0, 0), 1.0),
               WeightedPoint(2, Point(1, 0), 1.0))
        with pytest.raises(ValueError):
            Instance(points=pts, region=square_region(1.0))

    def test_rejects_point_outside_region(self):
        pts = (WeightedPoint(1, Point(0, 0), 1.0),
               WeightedPoint(2, Point(1, 0), 1.0),
               WeightedPoint(3, Point(5, 5), 1.0))
        with pytest.raises(ValueError):
            Instance(points=pts, region=square_region(1.0))

    def test_hull_region_accepts_boundary_points(self):
        inst = make_instance(generate_points(100), region="hull")
        assert inst.n == 100

    def test_cached_arrays(self):
        inst = small_instance()
        assert inst.xs.tolist() == [0.0, 100.0, 0.0]
        assert inst.ws.tolist() == [2.0, 1.0, 1.0]
