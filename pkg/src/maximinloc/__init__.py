"""Optimal solvers for the planar single weighted obnoxious facility
location problem: place one point in a convex region maximizing the minimum
weighted Euclidean distance to a set of demand points."""

from .apollonius import (Bisector, CircleBisector, LineBisector,
                         SolutionKind, TriangleSolution, WeightedPoint,
                         apollonius_bisector, solve_triangle,
                         weighted_distance)
from .geom import (Containment, DegenerateGeometryError, FrameTransform,
                   Point, Segment, Triangle, distance)
from .instances import (GeneratorState, InstanceSpec, generate,
                        generate_points, lcg_next, make_instance,
                        read_instance, read_points, write_instance,
                        write_points)
from .mesh import (ConvexPolygon, MeshTriangle, Triangulation, convex_hull,
                   delaunay, split_triangle)
from .objective import Instance, evaluate, in_region
from .report import RunReport, build_report
from .solvers import (Solution, SolverConfig, SolverStats, TriangleNode,
                      apollonius_global, bounds_set1, bounds_set2, btst,
                      multistart_heuristic)

__version__ = "0.1.0"

__all__ = [
    "Bisector", "CircleBisector", "Containment", "ConvexPolygon",
    "DegenerateGeometryError", "FrameTransform", "GeneratorState", "Instance",
    "InstanceSpec", "LineBisector", "MeshTriangle", "Point", "RunReport",
    "Segment", "Solution", "SolutionKind", "SolverConfig", "SolverStats",
    "Triangle", "TriangleNode", "TriangleSolution", "Triangulation",
    "WeightedPoint", "apollonius_bisector", "apollonius_global",
    "bounds_set1", "bounds_set2", "btst", "build_report", "convex_hull",
    "delaunay", "distance", "evaluate", "generate", "generate_points",
    "in_region", "lcg_next", "make_instance", "multistart_heuristic",
    "read_instance", "read_points", "solve_triangle", "split_triangle",
    "weighted_distance", "write_instance", "write_points",
]
