"""Solution methods for the weighted maximin location problem.

* `btst` — branch-and-bound over triangles seeded by the Delaunay faces of
  the demand points (two bound sets; the second uses the exact three-point
  solver on the initial demand-vertex triangles).
* `apollonius_global` — provably optimal candidate enumeration: bisector
  crossings with the region boundary, plus the interior equal-weighted-
  distance point of every demand triplet, with incumbent pruning.
* `multistart_heuristic` — compass-search local ascent from random feasible
  starts; no optimality guarantee, used as a baseline.
"""

from __future__ import annotations

import heapq
import math
import os
import time
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .apollonius import WeightedPoint, solve_triangle
from .geom import Containment, DegenerateGeometryError, Point, Triangle
from .mesh import convex_hull, delaunay
from .objective import REGION_BOUNDARY_REL_TOL, Instance, evaluate, in_region

BTST_VARIANTS = ("btst1", "btst2")
MAX_SPLIT_ITERATIONS = 10_000_000
HEURISTIC_MIN_STEP = 1e-9
HEURISTIC_MAX_ITERS = 100_000
HIT_REL_TOL = 1e-4


@dataclass(frozen=True)
class SolverConfig:
    epsilon: float = 1e-10
    starts: int = 100
    seed: int = 1

    def __post_init__(self) -> None:
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError("epsilon must lie in (0, 1)")
        if self.starts < 1:
            raise ValueError("starts must be >= 1")


@dataclass(frozen=True)
class TriangleNode:
    triangle: Triangle
    lb: float
    ub: float
    demand_vertices: bool = False

    def __post_init__(self) -> None:
        if self.lb > self.ub:
            raise ValueError("triangle node with lb > ub")


@dataclass(frozen=True)
class SolverStats:
    objective_calls: int = 0
    elapsed: float = 0.0
    phase1_lb: float | None = None
    phase1_ub: float | None = None
    phase1_remaining: int | None = None
    max_queue: int | None = None
    iterations: int | None = None
    boundary_candidates: int | None = None
    triplets: int | None = None
    starts: int | None = None
    hits: int | None = None


@dataclass(frozen=True)
class Solution:
    location: Point
    objective: float
    stats: SolverStats


def _region_arrays(inst: Instance):
    vx = np.array([v.x for v in inst.region.vertices])
    vy = np.array([v.y for v in inst.region.vertices])
    return vx, vy, REGION_BOUNDARY_REL_TOL * inst.region.diameter


def _bounds1_batch(vx: np.ndarray, vy: np.ndarray, inst: Instance):
    """Vectorized first bound set for a batch of triangles.

    vx, vy: (m, 3) vertex coordinates. Returns (lb, ub, cx, cy) where the
    lower bound is the objective at the centroid and the upper bound is
    min_i w_i * (largest distance from point i to the three vertices).
    """
    xs, ys, ws = inst.xs, inst.ys, inst.ws
    cx = vx.mean(axis=1)
    cy = vy.mean(axis=1)
    d = np.sqrt((xs[None, :] - cx[:, None]) ** 2
                + (ys[None, :] - cy[:, None]) ** 2)
    lb = (ws[None, :] * d).min(axis=1)
    d2 = (xs[None, None, :] - vx[:, :, None]) ** 2 \
        + (ys[None, None, :] - vy[:, :, None]) ** 2
    ub = (ws[None, :] * np.sqrt(d2.max(axis=1))).min(axis=1)
    # lb <= ub holds mathematically; last-ulp noise may invert it for
    # near-point triangles, so clamp (raising ub by noise stays valid)
    return lb, np.maximum(ub, lb), cx, cy


def bounds_set1(t: Triangle, inst: Instance) -> tuple[float, float]:
    """First bound set: centroid value below, vertex-distance envelope above."""
    vx = np.array([[t.v1.x, t.v2.x, t.v3.x]])
    vy = np.array([[t.v1.y, t.v2.y, t.v3.y]])
    lb, ub, _, _ = _bounds1_batch(vx, vy, inst)
    return float(lb[0]), float(ub[0])


def bounds_set2(p1: WeightedPoint, p2: WeightedPoint, p3: WeightedPoint,
                inst: Instance) -> tuple[float, float]:
    """Second bound set, for demand-vertex triangles: the exact three-point
    optimum bounds from above; its value against all points bounds below."""
    lb, ub, _ = _bounds2(p1, p2, p3, inst)
    return lb, ub


def _bounds2(p1, p2, p3, inst):
    s = solve_triangle(p1, p2, p3)
    lb = evaluate(s.location, inst)
    # the two sides travel different arithmetic paths; see _bounds1_batch
    return lb, max(s.objective, lb), s.location


def _triangle_children(t: Triangle) -> list[Triangle]:
    """Midpoint subdivision, silently dropping float-collapsed children.

    A dropped child is a sub-ulp-width strip; any of its points sits within
    ~1e-15 of a surviving sibling, so the branch-and-bound guarantee is
    unaffected at epsilon >= 1e-12.
    """
    a, b, c = t.v1, t.v2, t.v3
    mab = Point((a.x + b.x) / 2.0, (a.y + b.y) / 2.0)
    mbc = Point((b.x + c.x) / 2.0, (b.y + c.y) / 2.0)
    mca = Point((c.x + a.x) / 2.0, (c.y + a.y) / 2.0)
    kids = []
    for tri in ((a, mab, mca), (b, mbc, mab), (c, mca, mbc), (mab, mbc, mca)):
        try:
            kids.append(Triangle(*tri))
        except DegenerateGeometryError:
            continue
    return kids


def _require_hull_region(inst: Instance) -> None:
    hull = convex_hull([p.location for p in inst.points])
    if hull.vertices != inst.region.vertices:
        raise ValueError("BTST requires the region to be the convex hull "
                         "of the demand points")


def btst(inst: Instance, variant: str = "btst1",
         cfg: SolverConfig | None = None) -> Solution:
    """Branch-and-bound over triangles: split the largest-upper-bound
    triangle into four until every triangle satisfies ub <= best*(1+eps).

    btst1 applies the first bound set throughout; btst2 applies the second
    bound set on the initial Delaunay faces and the first set afterwards.
    """
    if variant not in BTST_VARIANTS:
        raise ValueError(f"unknown BTST variant {variant!r}")
    cfg = cfg or SolverConfig()
    _require_hull_region(inst)
    t0 = time.perf_counter()
    eps1 = 1.0 + cfg.epsilon

    tri = delaunay(inst.points)
    faces = tri.triangles
    calls = 0

    # Phase 1: bound every Delaunay face, keep the best feasible value seen.
    if variant == "btst1":
        vx = np.array([[f.triangle.v1.x, f.triangle.v2.x, f.triangle.v3.x]
                       for f in faces])
        vy = np.array([[f.triangle.v1.y, f.triangle.v2.y, f.triangle.v3.y]
                       for f in faces])
        lbs, ubs, cxs, cys = _bounds1_batch(vx, vy, inst)
        calls += len(faces)
        k = int(np.argmax(lbs))
        best = float(lbs[k])
        best_at = Point(float(cxs[k]), float(cys[k]))
    else:
        best = -math.inf
        best_at = None
        lbs = np.empty(len(faces))
        ubs = np.empty(len(faces))
        for idx, f in enumerate(faces):
            i, j, k = f.ids
            lb, ub, loc = _bounds2(inst.points[i], inst.points[j],
                                   inst.points[k], inst)
            calls += 1
            lbs[idx] = lb
            ubs[idx] = ub
            if lb > best:
                best = lb
                best_at = loc
    phase1_lb = best

    heap: list[tuple[float, int, TriangleNode]] = []
    seq = 0
    for idx, f in enumerate(faces):
        if ubs[idx] > best * eps1:
            node = TriangleNode(triangle=f.triangle, lb=float(lbs[idx]),
                                ub=float(ubs[idx]), demand_vertices=True)
            heap.append((-node.ub, seq, node))
            seq += 1
    heapq.heapify(heap)
    phase1_remaining = len(heap)
    phase1_ub = max((-e[0] for e in heap), default=best)

    # Phase 2: split-and-bound with the first bound set.
    iterations = 0
    max_queue = len(heap)
    while heap:
        neg_ub, _, parent = heapq.heappop(heap)
        if -neg_ub <= best * eps1:
            continue
        iterations += 1
        if iterations > MAX_SPLIT_ITERATIONS:
            raise RuntimeError("BTST failed to converge")
        kids = _triangle_children(parent.triangle)
        if not kids:
            continue
        vx = np.array([[t.v1.x, t.v2.x, t.v3.x] for t in kids])
        vy = np.array([[t.v1.y, t.v2.y, t.v3.y] for t in kids])
        lbs, ubs, cxs, cys = _bounds1_batch(vx, vy, inst)
        calls += len(kids)
        k = int(np.argmax(lbs))
        if float(lbs[k]) > best:
            best = float(lbs[k])
            best_at = Point(float(cxs[k]), float(cys[k]))
            # eager discard keeps the queue-size statistic meaningful
            heap = [e for e in heap if -e[0] > best * eps1]
            heapq.heapify(heap)
        for t, lb, ub in zip(kids, lbs, ubs):
            if float(ub) > best * eps1:
                node = TriangleNode(triangle=t, lb=float(lb), ub=float(ub))
                heapq.heappush(heap, (-node.ub, seq, node))
                seq += 1
        if len(heap) > max_queue:
            max_queue = len(heap)

    assert best_at is not None
    objective = evaluate(best_at, inst)
    stats = SolverStats(objective_calls=calls,
                        elapsed=time.perf_counter() - t0,
                        phase1_lb=phase1_lb,
                        phase1_ub=float(phase1_ub),
                        phase1_remaining=phase1_remaining,
                        max_queue=max_queue,
                        iterations=iterations)
    return Solution(location=best_at, objective=objective, stats=stats)


def _threads_from_env() -> int:
    raw = os.environ.get("MAXIMIN_THREADS", "0").strip()
    if not raw:
        return 0
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(
            f"MAXIMIN_THREADS must be an integer, got {raw!r}") from exc
    return max(0, value)


def _balanced_chunks(n: int, nchunks: int) -> tuple[np.ndarray, np.ndarray]:
    """Split the outer triplet index so chunks carry similar work
    (work at index i is ~C(n-1-i, 2))."""
    weights = np.array([(n - 1 - i) * (n - 2 - i) / 2.0 for i in range(n)])
    cum = np.cumsum(weights)
    total = cum[-1]
    lo: list[int] = []
    hi: list[int] = []
    start = 0
    for c in range(1, nchunks + 1):
        target = total * c / nchunks
        end = int(np.searchsorted(cum, target)) + 1
        end = min(max(end, start + 1), n)
        lo.append(start)
        hi.append(end)
        start = end
        if start >= n:
            break
    hi[-1] = n
    return np.array(lo, dtype=np.int64), np.array(hi, dtype=np.int64)


def apollonius_global(inst: Instance) -> Solution:
    """Globally optimal enumeration of bisector candidate points.

    Scans every bisector crossing with the region sides, then the interior
    equal-weighted-distance point of every triplet (at most one per triplet
    lies inside its triangle), all under incumbent pruning. Honors the
    MAXIMIN_THREADS environment variable for the triplet phase.
    """
    t0 = time.perf_counter()
    xs, ys, ws = inst.xs, inst.ys, inst.ws
    n = inst.n
    sides = inst.region.sides
    sax = np.array([s.a.x for s in sides])
    say = np.array([s.a.y for s in sides])
    sbx = np.array([s.b.x for s in sides])
    sby = np.array([s.b.y for s in sides])
    rvx, rvy, region_tol = _region_arrays(inst)

    best, bx, by, calls_b = K.boundary_scan(xs, ys, ws, sax, say, sbx, sby)

    threads = _threads_from_env()
    if threads >= 2:
        import numba

        usable = min(threads, numba.config.NUMBA_NUM_THREADS)
        numba.set_num_threads(usable)
        lo, hi = _balanced_chunks(n, usable * 4)
        best, bx, by, calls_t = K.triplet_scan_parallel(
            xs, ys, ws, rvx, rvy, region_tol, best, bx, by, lo, hi)
    else:
        best, bx, by, calls_t = K.triplet_scan(
            xs, ys, ws, rvx, rvy, region_tol, best, bx, by, 0, n)

    if best < 0.0:
        raise RuntimeError("no feasible candidate point was found")
    location = Point(bx, by)
    objective = evaluate(location, inst)
    stats = SolverStats(objective_calls=calls_b + int(calls_t),
                        elapsed=time.perf_counter() - t0,
                        boundary_candidates=n * (n - 1) // 2 * len(sides),
                        triplets=n * (n - 1) * (n - 2) // 6)
    return Solution(location=location, objective=objective, stats=stats)


def multistart_heuristic(inst: Instance, cfg: SolverConfig | None = None,
                         reference: float | None = None,
                         initial: list[Point] | None = None) -> Solution:
    """Compass-search ascents from random feasible starts (plus any supplied
    initial points). Never exceeds the true optimum; offers no guarantee of
    reaching it. When a reference objective is given, stats.hits counts the
    starts that land within 1e-4 relative of it.
    """
    cfg = cfg or SolverConfig()
    t0 = time.perf_counter()
    rvx, rvy, region_tol = _region_arrays(inst)
    xs, ys, ws = inst.xs, inst.ys, inst.ws
    step0 = inst.region.diameter / 10.0
    xmin, ymin, xmax, ymax = inst.region.bounds

    rng = np.random.default_rng(cfg.seed)
    starts: list[Point] = []
    for p in list(initial or [])[:cfg.starts]:
        if in_region(p, inst.region) is Containment.OUTSIDE:
            qx, qy = K.project_to_polygon(p.x, p.y, rvx, rvy)
            p = Point(float(qx), float(qy))
        starts.append(p)
    attempts = 0
    while len(starts) < cfg.starts:
        attempts += 1
        if attempts > 1000 * cfg.starts:
            raise RuntimeError("could not sample feasible starting points")
        p = Point(float(rng.uniform(xmin, xmax)), float(rng.uniform(ymin, ymax)))
        if in_region(p, inst.region) is not Containment.OUTSIDE:
            starts.append(p)

    best = -math.inf
    best_at: Point | None = None
    calls = 0
    iters = 0
    hits = 0
    for p in starts:
        theta = float(rng.uniform(0.0, 2.0 * math.pi))
        x, y, val, c, it = K.compass_ascent(
            p.x, p.y, xs, ys, ws, rvx, rvy, region_tol,
            math.cos(theta), math.sin(theta), step0, HEURISTIC_MIN_STEP,
            HEURISTIC_MAX_ITERS, K._OCTANT_COS, K._OCTANT_SIN)
        calls += int(c)
        iters += int(it)
        if reference is not None and abs(val - reference) <= HIT_REL_TOL * abs(reference):
            hits += 1
        if val > best:
            best = val
            best_at = Point(x, y)

    assert best_at is not None
    objective = evaluate(best_at, inst)
    stats = SolverStats(objective_calls=calls,
                        elapsed=time.perf_counter() - t0,
                        iterations=iters,
                        starts=len(starts),
                        hits=hits if reference is not None else None)
    return Solution(location=best_at, objective=objective, stats=stats)
