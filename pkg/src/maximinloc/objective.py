"""Maximin objective evaluation and region feasibility."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .apollonius import WeightedPoint
from .geom import Containment, Point
from .mesh import ConvexPolygon

# Feasibility band around the region boundary, relative to its diameter.
REGION_BOUNDARY_REL_TOL = 1e-12


def in_region(x: Point, poly: ConvexPolygon) -> Containment:
    """Half-plane classification of a point against a convex CCW polygon."""
    tol = REGION_BOUNDARY_REL_TOL * poly.diameter
    verts = poly.vertices
    m = len(verts)
    worst = math.inf
    for i in range(m):
        a = verts[i]
        b = verts[(i + 1) % m]
        ex, ey = b.x - a.x, b.y - a.y
        # signed perpendicular distance, positive on the interior side
        d = (ex * (x.y - a.y) - ey * (x.x - a.x)) / math.hypot(ex, ey)
        if d < worst:
            worst = d
    if worst > tol:
        return Containment.INSIDE
    if worst >= -tol:
        return Containment.ON_BOUNDARY
    return Containment.OUTSIDE


@dataclass(frozen=True)
class Instance:
    """Demand points plus the convex feasible region containing them."""

    points: tuple[WeightedPoint, ...]
    region: ConvexPolygon

    def __post_init__(self) -> None:
        if len(self.points) < 3:
            raise ValueError("an instance needs at least 3 demand points")
        for p in self.points:
            if in_region(p.location, self.region) is Containment.OUTSIDE:
                raise ValueError(
                    f"demand point {p.id} at ({p.location.x}, {p.location.y}) "
                    "lies outside the feasible region")

    @property
    def n(self) -> int:
        return len(self.points)

    @cached_property
    def xs(self) -> np.ndarray:
        return np.array([p.location.x for p in self.points], dtype=np.float64)

    @cached_property
    def ys(self) -> np.ndarray:
        return np.array([p.location.y for p in self.points], dtype=np.float64)

    @cached_property
    def ws(self) -> np.ndarray:
        return np.array([p.weight for p in self.points], dtype=np.float64)


def evaluate(x: Point, inst: Instance,
             incumbent: float | None = None) -> float | None:
    """Smallest weighted distance from x to the demand points.

    With an incumbent, returns None (pruned) exactly when the full value
    would fall below it; ties with the incumbent still return the value.
    """
    dx = inst.xs - x.x
    dy = inst.ys - x.y
    value = float(np.min(inst.ws * np.sqrt(dx * dx + dy * dy)))
    if incumbent is not None and value < incumbent:
        return None
    return value
