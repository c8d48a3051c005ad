"""Convex hull, Delaunay triangulation and triangle refinement.

Orientation and incircle decisions are sign-exact (float filter with a
rational fallback), which pins down the treatment of the almost-collinear
hull vertices that occur in the generated benchmark instances: a vertex stays
on the hull iff it is extreme in exact arithmetic over the float coordinates.

The triangulation is built by incremental insertion in lexicographic order
with Lawson edge flips. Every new point is outside the hull of the points
inserted before it, so no point location is needed; the point is fanned to
the visible boundary edges and the affected edges are legalized.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ._exact import incircle_sign, orient_sign
from .apollonius import WeightedPoint
from .geom import DegenerateGeometryError, Point, Segment, Triangle, distance


@dataclass(frozen=True)
class ConvexPolygon:
    """Convex region given by its counterclockwise vertex cycle."""

    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        v = self.vertices
        if len(v) < 3:
            raise DegenerateGeometryError("a polygon needs at least 3 vertices")
        m = len(v)
        for i in range(m):
            a, b = v[i], v[(i + 1) % m]
            if a.x == b.x and a.y == b.y:
                raise DegenerateGeometryError("duplicate consecutive polygon vertices")
            c = v[(i + 2) % m]
            if orient_sign(a.x, a.y, b.x, b.y, c.x, c.y) < 0:
                raise ValueError("polygon vertices are not counterclockwise convex")

    @property
    def sides(self) -> tuple[Segment, ...]:
        v = self.vertices
        return tuple(Segment(v[i], v[(i + 1) % len(v)]) for i in range(len(v)))

    @cached_property
    def bounds(self) -> tuple[float, float, float, float]:
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return (min(xs), min(ys), max(xs), max(ys))

    @cached_property
    def diameter(self) -> float:
        v = self.vertices
        return max(distance(v[i], v[j])
                   for i in range(len(v)) for j in range(i + 1, len(v)))

    @cached_property
    def area(self) -> float:
        v = self.vertices
        s = 0.0
        for i in range(len(v)):
            a, b = v[i], v[(i + 1) % len(v)]
            s += a.x * b.y - b.x * a.y
        return 0.5 * s


@dataclass(frozen=True)
class MeshTriangle:
    """A triangulation face: positional demand-point indices plus geometry."""

    ids: tuple[int, int, int]
    triangle: Triangle


@dataclass(frozen=True)
class Triangulation:
    points: tuple[WeightedPoint, ...]
    triangles: tuple[MeshTriangle, ...]

    @property
    def count(self) -> int:
        return len(self.triangles)


def convex_hull(points: list[Point] | tuple[Point, ...]) -> ConvexPolygon:
    """Minimal counterclockwise hull by monotone chain.

    Exactly-collinear edge points are excluded; vertices extreme by any
    nonzero exact margin are kept.
    """
    seen: set[tuple[float, float]] = set()
    uniq: list[Point] = []
    for p in points:
        key = (p.x, p.y)
        if key not in seen:
            seen.add(key)
            uniq.append(p)
    uniq.sort(key=lambda p: (p.x, p.y))
    if len(uniq) < 3:
        raise DegenerateGeometryError("hull needs at least 3 distinct points")

    def chain(seq: list[Point]) -> list[Point]:
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and orient_sign(out[-2].x, out[-2].y,
                                                out[-1].x, out[-1].y,
                                                p.x, p.y) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(uniq)
    upper = chain(uniq[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateGeometryError("all points are collinear")
    return ConvexPolygon(vertices=tuple(hull))


def split_triangle(t: Triangle) -> tuple[Triangle, Triangle, Triangle, Triangle]:
    """Midpoint subdivision into three corner triangles plus the medial one.

    Raises DegenerateGeometryError when a child collapses in floating point
    (possible for slivers whose height is below coordinate rounding).
    """
    a, b, c = t.v1, t.v2, t.v3
    mab = Point((a.x + b.x) / 2.0, (a.y + b.y) / 2.0)
    mbc = Point((b.x + c.x) / 2.0, (b.y + c.y) / 2.0)
    mca = Point((c.x + a.x) / 2.0, (c.y + a.y) / 2.0)
    return (Triangle(a, mab, mca),
            Triangle(b, mbc, mab),
            Triangle(c, mca, mbc),
            Triangle(mab, mbc, mca))


class _Mesh:
    """Mutable halfedge-ish store used while building the triangulation."""

    def __init__(self, coords: list[tuple[float, float]]):
        self.coords = coords
        self.tris: list[tuple[int, int, int]] = []
        self.alive: list[bool] = []
        self.edge2tri: dict[tuple[int, int], int] = {}
        self.hull_next: dict[int, int] = {}
        self.hull_prev: dict[int, int] = {}

    def orient(self, i: int, j: int, k: int) -> int:
        (ax, ay), (bx, by), (cx, cy) = self.coords[i], self.coords[j], self.coords[k]
        return orient_sign(ax, ay, bx, by, cx, cy)

    def add_triangle(self, i: int, j: int, k: int) -> int:
        tid = len(self.tris)
        self.tris.append((i, j, k))
        self.alive.append(True)
        for u, v in ((i, j), (j, k), (k, i)):
            self.edge2tri[(u, v)] = tid
        return tid

    def remove_triangle(self, tid: int) -> None:
        i, j, k = self.tris[tid]
        self.alive[tid] = False
        for u, v in ((i, j), (j, k), (k, i)):
            if self.edge2tri.get((u, v)) == tid:
                del self.edge2tri[(u, v)]

    def apex(self, tid: int, u: int, v: int) -> int:
        """Vertex of the triangle opposite directed edge u->v."""
        i, j, k = self.tris[tid]
        if i != u and i != v:
            return i
        if j != u and j != v:
            return j
        return k

    def legalize(self, first: list[tuple[int, int]]) -> None:
        stack = list(first)
        while stack:
            u, v = stack.pop()
            t1 = self.edge2tri.get((u, v))
            t2 = self.edge2tri.get((v, u))
            if t1 is None or t2 is None:
                continue
            c1 = self.apex(t1, u, v)
            c2 = self.apex(t2, v, u)
            (ax, ay), (bx, by) = self.coords[u], self.coords[v]
            (px, py), (qx, qy) = self.coords[c1], self.coords[c2]
            # (u, v, c1) is CCW; flip when the opposite apex is strictly
            # inside its circumcircle (exact ties stay unflipped).
            if incircle_sign(ax, ay, bx, by, px, py, qx, qy) <= 0:
                continue
            self.remove_triangle(t1)
            self.remove_triangle(t2)
            self.add_triangle(u, c2, c1)
            self.add_triangle(c2, v, c1)
            stack.extend(((u, c2), (c2, v), (v, c1), (c1, u)))


def _build_mesh(coords: list[tuple[float, float]]) -> _Mesh:
    n = len(coords)
    order = sorted(range(n), key=lambda i: coords[i])
    mesh = _Mesh(coords)

    # Leading run of exactly-collinear points forms a chain; the first point
    # off the line is fanned to every chain segment.
    chain = [order[0], order[1]]
    pos = 2
    side = 0
    while pos < n:
        p = order[pos]
        side = mesh.orient(chain[0], chain[1], p)
        if side != 0:
            break
        chain.append(p)
        pos += 1
    if pos == n:
        raise DegenerateGeometryError("all points are collinear")

    p = order[pos]
    pos += 1
    for a, b in zip(chain, chain[1:]):
        if side > 0:
            mesh.add_triangle(a, b, p)
        else:
            mesh.add_triangle(b, a, p)
    boundary = chain + [p] if side > 0 else chain[::-1] + [p]
    m = len(boundary)
    for i in range(m):
        u, v = boundary[i], boundary[(i + 1) % m]
        mesh.hull_next[u] = v
        mesh.hull_prev[v] = u
    mesh.legalize([(a, b) for a, b in zip(chain, chain[1:])])

    last = p
    while pos < n:
        p = order[pos]
        pos += 1
        (px, py) = coords[p]

        def visible(u: int, v: int) -> bool:
            (ax, ay), (bx, by) = coords[u], coords[v]
            return orient_sign(ax, ay, bx, by, px, py) < 0

        # p is lexicographically beyond every hull vertex, so at least one
        # boundary edge near the previous extreme vertex is visible.
        start = last
        if not visible(start, mesh.hull_next[start]):
            start = mesh.hull_prev[start]
            while not visible(start, mesh.hull_next[start]):
                start = mesh.hull_prev[start]
                if start == last:
                    raise RuntimeError("no visible hull edge found")
        # Extend the visible run backwards, then forwards.
        first = start
        while visible(mesh.hull_prev[first], first):
            first = mesh.hull_prev[first]
        end = mesh.hull_next[start]
        while visible(end, mesh.hull_next[end]):
            end = mesh.hull_next[end]

        new_edges: list[tuple[int, int]] = []
        u = first
        while u != end:
            v = mesh.hull_next[u]
            mesh.add_triangle(u, p, v)
            new_edges.append((v, u))
            u = v
        # Splice p into the hull chain in place of the interior run.
        u = mesh.hull_next[first]
        while u != end:
            nxt = mesh.hull_next[u]
            del mesh.hull_next[u]
            del mesh.hull_prev[u]
            u = nxt
        mesh.hull_next[first] = p
        mesh.hull_prev[p] = first
        mesh.hull_next[p] = end
        mesh.hull_prev[end] = p

        mesh.legalize(new_edges)
        last = p

    return mesh


def delaunay(points: list[WeightedPoint] | tuple[WeightedPoint, ...]) -> Triangulation:
    """Standard (unweighted) Delaunay triangulation of the demand points.

    Raises on duplicate locations or an all-collinear input. The result
    satisfies the empty-circumcircle property in exact float arithmetic, with
    cocircular ties left unflipped (deterministic for a fixed input order).
    """
    pts = tuple(points)
    if len(pts) < 3:
        raise DegenerateGeometryError("triangulation needs at least 3 points")
    coords = [(p.location.x, p.location.y) for p in pts]
    if len(set(coords)) != len(coords):
        raise DegenerateGeometryError("duplicate demand point locations")

    mesh = _build_mesh(coords)
    faces: list[MeshTriangle] = []
    for tid, (i, j, k) in enumerate(mesh.tris):
        if not mesh.alive[tid]:
            continue
        tri = Triangle(pts[i].location, pts[j].location, pts[k].location)
        faces.append(MeshTriangle(ids=(i, j, k), triangle=tri))
    faces.sort(key=lambda f: f.ids)

    boundary_edges = sum(1 for (u, v) in mesh.edge2tri
                         if (v, u) not in mesh.edge2tri)
    if len(faces) != 2 * len(pts) - 2 - boundary_edges:
        raise RuntimeError("triangulation failed the Euler consistency check")
    return Triangulation(points=pts, triangles=tuple(faces))
