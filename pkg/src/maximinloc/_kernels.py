"""Compiled kernels for the candidate-enumeration solvers.

These mirror the frame-based intersection formulas of `geom` on raw floats,
so the hot loops (all-pairs boundary crossings, all-triplets interior
candidates, compass ascents) run at native speed. Tolerances are shared with
the pure-Python implementations.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit, prange

TANGENT_REL_TOL = 1e-12
SEGMENT_PARAM_TOL = 1e-12
TRIANGLE_BOUNDARY_TOL = 1e-12
EQUAL_WEIGHT_REL_TOL = 1e-12

# cos/sin of t*45 degrees, t = 0..7
_OCTANT_COS = np.array([1.0, math.sqrt(0.5), 0.0, -math.sqrt(0.5),
                        -1.0, -math.sqrt(0.5), 0.0, math.sqrt(0.5)])
_OCTANT_SIN = np.array([0.0, math.sqrt(0.5), 1.0, math.sqrt(0.5),
                        0.0, -math.sqrt(0.5), -1.0, -math.sqrt(0.5)])


@njit(cache=True)
def eval_pruned(px, py, xs, ys, ws, incumbent):
    """Min weighted distance, or -1.0 once any term drops below incumbent."""
    best = np.inf
    for i in range(xs.shape[0]):
        dx = xs[i] - px
        dy = ys[i] - py
        v = ws[i] * math.sqrt(dx * dx + dy * dy)
        if v < incumbent:
            return -1.0
        if v < best:
            best = v
    return best


@njit(cache=True)
def min_signed_dist(px, py, vx, vy):
    """Min over CCW polygon sides of the signed distance (interior > 0)."""
    m = vx.shape[0]
    worst = np.inf
    for i in range(m):
        ax, ay = vx[i], vy[i]
        j = i + 1 if i + 1 < m else 0
        bx, by = vx[j], vy[j]
        ex, ey = bx - ax, by - ay
        d = (ex * (py - ay) - ey * (px - ax)) / math.sqrt(ex * ex + ey * ey)
        if d < worst:
            worst = d
    return worst


@njit(cache=True)
def project_to_polygon(px, py, vx, vy):
    """Closest point of a convex polygon boundary (caller checks interior)."""
    m = vx.shape[0]
    best_d2 = np.inf
    qx, qy = px, py
    for i in range(m):
        ax, ay = vx[i], vy[i]
        j = i + 1 if i + 1 < m else 0
        bx, by = vx[j], vy[j]
        ex, ey = bx - ax, by - ay
        t = ((px - ax) * ex + (py - ay) * ey) / (ex * ex + ey * ey)
        if t < 0.0:
            t = 0.0
        elif t > 1.0:
            t = 1.0
        cx, cy = ax + t * ex, ay + t * ey
        d2 = (px - cx) ** 2 + (py - cy) ** 2
        if d2 < best_d2:
            best_d2 = d2
            qx, qy = cx, cy
    return qx, qy


@njit(cache=True)
def tri_containment(px, py, ax, ay, bx, by, cx, cy):
    """0 inside, 1 boundary, 2 outside; mirrors geom.point_in_triangle."""
    area = 0.5 * abs((bx - ax) * (cy - ay) - (cx - ax) * (by - ay))
    tol = TRIANGLE_BOUNDARY_TOL * (1.0 + area)
    t1 = (bx - px) * (cy - py) - (cx - px) * (by - py)
    t2 = (cx - px) * (ay - py) - (ax - px) * (cy - py)
    t3 = (ax - px) * (by - py) - (bx - px) * (ay - py)
    pos = t1 > tol or t2 > tol or t3 > tol
    neg = t1 < -tol or t2 < -tol or t3 < -tol
    if pos and neg:
        return 2
    if abs(t1) <= tol or abs(t2) <= tol or abs(t3) <= tol:
        return 1
    return 0


@njit(cache=True)
def pair_bisector(ax, ay, aw, bx, by, bw):
    """(is_line, p1, p2, p3, p4): circle (0, cx, cy, r, _) for unequal
    weights, line (1, midx, midy, dirx, diry) for equal weights."""
    if abs(aw - bw) <= EQUAL_WEIGHT_REL_TOL * max(aw, bw):
        d = math.sqrt((bx - ax) ** 2 + (by - ay) ** 2)
        return 1, (ax + bx) / 2.0, (ay + by) / 2.0, -(by - ay) / d, (bx - ax) / d
    s1 = aw * aw
    s2 = bw * bw
    denom = s1 - s2
    cx = (s1 * ax - s2 * bx) / denom
    cy = (s1 * ay - s2 * by) / denom
    r = aw * bw / abs(denom) * math.sqrt((bx - ax) ** 2 + (by - ay) ** 2)
    return 0, cx, cy, r, 0.0


@njit(cache=True)
def circle_segment_hits(ccx, ccy, r, ax, ay, bx, by):
    """(count, x1, y1, x2, y2) intersections of a circle with a segment."""
    dx, dy = bx - ax, by - ay
    d = math.sqrt(dx * dx + dy * dy)
    co, si = dx / d, dy / d
    tx, ty = ccx - ax, ccy - ay
    fx = co * tx + si * ty
    fy = -si * tx + co * ty
    disc = (r - fy) * (r + fy)
    tol = TANGENT_REL_TOL * r * r
    if disc < -tol:
        return 0, 0.0, 0.0, 0.0, 0.0
    lo = -SEGMENT_PARAM_TOL * d
    hi = d + SEGMENT_PARAM_TOL * d
    if disc <= tol:
        if lo <= fx <= hi:
            return 1, ax + co * fx, ay + si * fx, 0.0, 0.0
        return 0, 0.0, 0.0, 0.0, 0.0
    h = math.sqrt(disc)
    u1, u2 = fx - h, fx + h
    n = 0
    x1 = y1 = x2 = y2 = 0.0
    if lo <= u1 <= hi:
        x1, y1 = ax + co * u1, ay + si * u1
        n = 1
    if lo <= u2 <= hi:
        if n == 0:
            x1, y1 = ax + co * u2, ay + si * u2
            n = 1
        else:
            x2, y2 = ax + co * u2, ay + si * u2
            n = 2
    return n, x1, y1, x2, y2


@njit(cache=True)
def line_segment_hit(px, py, ddx, ddy, ax, ay, bx, by):
    """(count, x, y) intersection of an infinite line with a segment."""
    ex, ey = bx - ax, by - ay
    denom = ddx * ey - ddy * ex
    if denom == 0.0:
        return 0, 0.0, 0.0
    u = ((ax - px) * ddy - (ay - py) * ddx) / denom
    if -SEGMENT_PARAM_TOL <= u <= 1.0 + SEGMENT_PARAM_TOL:
        return 1, ax + u * ex, ay + u * ey
    return 0, 0.0, 0.0


@njit(cache=True)
def circle_circle_hits(c1x, c1y, r1, c2x, c2y, r2):
    """(count, x1, y1, x2, y2) intersections of two circles."""
    dx, dy = c2x - c1x, c2y - c1y
    d2 = dx * dx + dy * dy
    if d2 == 0.0:
        return 0, 0.0, 0.0, 0.0, 0.0
    disc = ((r1 + r2) * (r1 + r2) - d2) * (d2 - (r1 - r2) * (r1 - r2))
    tol = TANGENT_REL_TOL * d2
    if disc < -tol:
        return 0, 0.0, 0.0, 0.0, 0.0
    d = math.sqrt(d2)
    co, si = dx / d, dy / d
    x = (r1 * r1 + d2 - r2 * r2) / (2.0 * d)
    if disc <= tol:
        return 1, c1x + co * x, c1y + si * x, 0.0, 0.0
    y = math.sqrt(disc) / (2.0 * d)
    return (2, c1x + co * x - si * y, c1y + si * x + co * y,
            c1x + co * x + si * y, c1y + si * x - co * y)


@njit(cache=True)
def circle_line_hits(ccx, ccy, r, px, py, ddx, ddy):
    """(count, x1, y1, x2, y2) intersections of a circle with a line."""
    tx, ty = ccx - px, ccy - py
    fx = ddx * tx + ddy * ty
    fy = -ddy * tx + ddx * ty
    disc = (r - fy) * (r + fy)
    tol = TANGENT_REL_TOL * r * r
    if disc < -tol:
        return 0, 0.0, 0.0, 0.0, 0.0
    if disc <= tol:
        return 1, px + ddx * fx, py + ddy * fx, 0.0, 0.0
    h = math.sqrt(disc)
    return (2, px + ddx * (fx - h), py + ddy * (fx - h),
            px + ddx * (fx + h), py + ddy * (fx + h))


@njit(cache=True)
def line_line_hit(p1x, p1y, d1x, d1y, p2x, p2y, d2x, d2y):
    """(count, x, y) intersection of two lines; parallel lines miss."""
    denom = d1x * d2y - d1y * d2x
    if denom == 0.0:
        return 0, 0.0, 0.0
    t = ((p2x - p1x) * d2y - (p2y - p1y) * d2x) / denom
    return 1, p1x + t * d1x, p1y + t * d1y


@njit(cache=True)
def bisector_pair_hits(l1, a1, b1, c1, d1, l2, a2, b2, c2, d2):
    """Intersections of two bisectors given in pair_bisector encoding."""
    if l1 == 0 and l2 == 0:
        return circle_circle_hits(a1, b1, c1, a2, b2, c2)
    if l1 == 0 and l2 == 1:
        return circle_line_hits(a1, b1, c1, a2, b2, c2, d2)
    if l1 == 1 and l2 == 0:
        return circle_line_hits(a2, b2, c2, a1, b1, c1, d1)
    n, x, y = line_line_hit(a1, b1, c1, d1, a2, b2, c2, d2)
    return n, x, y, 0.0, 0.0


@njit(cache=True)
def boundary_scan(xs, ys, ws, sax, say, sbx, sby):
    """Evaluate all bisector crossings with the region sides.

    Pairs in index order, sides in order, near crossing before far; the
    incumbent prunes evaluations. Returns (best, x, y, calls).
    """
    n = xs.shape[0]
    m = sax.shape[0]
    best = -1.0
    bx = by = 0.0
    calls = 0
    for i in range(n):
        for j in range(i + 1, n):
            isl, p1, p2, p3, p4 = pair_bisector(xs[i], ys[i], ws[i],
                                                xs[j], ys[j], ws[j])
            for s in range(m):
                if isl == 1:
                    cnt, q1x, q1y = line_segment_hit(p1, p2, p3, p4,
                                                     sax[s], say[s],
                                                     sbx[s], sby[s])
                    q2x = q2y = 0.0
                else:
                    cnt, q1x, q1y, q2x, q2y = circle_segment_hits(
                        p1, p2, p3, sax[s], say[s], sbx[s], sby[s])
                if cnt >= 1:
                    calls += 1
                    v = eval_pruned(q1x, q1y, xs, ys, ws, best)
                    if v > best:
                        best, bx, by = v, q1x, q1y
                if cnt == 2:
                    calls += 1
                    v = eval_pruned(q2x, q2y, xs, ys, ws, best)
                    if v > best:
                        best, bx, by = v, q2x, q2y
    return best, bx, by, calls


@njit(cache=True)
def triplet_scan(xs, ys, ws, rvx, rvy, region_tol, best0, bx0, by0,
                 i_lo, i_hi):
    """Evaluate equal-weighted-distance points of demand triplets.

    For each i<j<k the two bisectors sharing the smallest-weight vertex are
    intersected; crossings inside (or on) the triplet triangle and inside
    the region are evaluated against the incumbent.
    Returns (best, x, y, calls).
    """
    n = xs.shape[0]
    best = best0
    bx, by = bx0, by0
    calls = 0
    for i in range(i_lo, i_hi):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                # anchor = smallest weight, ties by position order
                a, b, c = i, j, k
                if ws[j] < ws[a]:
                    a, b, c = j, i, k
                if ws[k] < ws[a]:
                    a, b, c = k, i, j
                l1, p1, p2, p3, p4 = pair_bisector(xs[a], ys[a], ws[a],
                                                   xs[b], ys[b], ws[b])
                l2, q1, q2, q3, q4 = pair_bisector(xs[a], ys[a], ws[a],
                                                   xs[c], ys[c], ws[c])
                cnt, u1x, u1y, u2x, u2y = bisector_pair_hits(
                    l1, p1, p2, p3, p4, l2, q1, q2, q3, q4)
                for t in range(cnt):
                    qx = u1x if t == 0 else u2x
                    qy = u1y if t == 0 else u2y
                    if tri_containment(qx, qy, xs[i], ys[i], xs[j], ys[j],
                                       xs[k], ys[k]) == 2:
                        continue
                    if min_signed_dist(qx, qy, rvx, rvy) < -region_tol:
                        continue
                    calls += 1
                    v = eval_pruned(qx, qy, xs, ys, ws, best)
                    if v > best:
                        best, bx, by = v, qx, qy
    return best, bx, by, calls


@njit(cache=True, parallel=True)
def triplet_scan_parallel(xs, ys, ws, rvx, rvy, region_tol, best0, bx0, by0,
                          chunk_lo, chunk_hi):
    """Chunked triplet scan; contiguous i-ranges keep the serial tie-break
    order when merged first-chunk-first."""
    nchunks = chunk_lo.shape[0]
    bests = np.empty(nchunks)
    bxs = np.empty(nchunks)
    bys = np.empty(nchunks)
    calls = np.zeros(nchunks, dtype=np.int64)
    for c in prange(nchunks):
        b, x, y, cl = triplet_scan(xs, ys, ws, rvx, rvy, region_tol,
                                   best0, bx0, by0, chunk_lo[c], chunk_hi[c])
        bests[c] = b
        bxs[c] = x
        bys[c] = y
        calls[c] = cl
    best, bx, by = best0, bx0, by0
    total = 0
    for c in range(nchunks):
        total += calls[c]
        if bests[c] > best:
            best, bx, by = bests[c], bxs[c], bys[c]
    return best, bx, by, total


@njit(cache=True)
def compass_ascent(x0, y0, xs, ys, ws, pvx, pvy, region_tol,
                   base_cos, base_sin, step0, min_step, max_iters,
                   oct_cos, oct_sin):
    """Derivative-free ascent of the maximin objective inside a convex
    polygon: eight compass directions (rotated per start), step halving on
    failure, projection of infeasible trial points onto the polygon.
    Returns (x, y, value, calls, iters)."""
    x, y = x0, y0
    val = eval_pruned(x, y, xs, ys, ws, -1.0)
    calls = 1
    step = step0
    iters = 0
    while step >= min_step and iters < max_iters:
        iters += 1
        bestv = val
        bx, by = x, y
        for t in range(8):
            dc = base_cos * oct_cos[t] - base_sin * oct_sin[t]
            ds = base_sin * oct_cos[t] + base_cos * oct_sin[t]
            cx = x + step * dc
            cy = y + step * ds
            if min_signed_dist(cx, cy, pvx, pvy) < -region_tol:
                cx, cy = project_to_polygon(cx, cy, pvx, pvy)
            calls += 1
            v = eval_pruned(cx, cy, xs, ys, ws, bestv)
            if v > bestv:
                bestv, bx, by = v, cx, cy
        if bestv > val:
            val, x, y = bestv, bx, by
        else:
            step *= 0.5
    return x, y, val, calls, iters
