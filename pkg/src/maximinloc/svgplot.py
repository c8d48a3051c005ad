"""SVG rendering of instances: demand points, hull, optional Delaunay edges
and the optimum marker. The viewBox spans the feasible region plus a 5%
margin, in data coordinates (y flipped for screen orientation)."""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .geom import Point
from .mesh import Triangulation
from .objective import Instance

MARGIN_FRACTION = 0.05


def render_instance_svg(inst: Instance, path: str,
                        solution: Point | None = None,
                        triangulation: Triangulation | None = None) -> None:
    xmin, ymin, xmax, ymax = inst.region.bounds
    span = max(xmax - xmin, ymax - ymin)
    margin = MARGIN_FRACTION * span

    def fy(y: float) -> float:
        # flip vertically so larger y is drawn upward
        return (ymin + ymax) - y

    root = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "viewBox": f"{xmin - margin} {ymin - margin} "
                   f"{xmax - xmin + 2 * margin} {ymax - ymin + 2 * margin}",
        "width": "720",
        "height": "720",
    })

    if triangulation is not None:
        parts = []
        for face in triangulation.triangles:
            t = face.triangle
            parts.append(f"M {t.v1.x} {fy(t.v1.y)} L {t.v2.x} {fy(t.v2.y)} "
                         f"L {t.v3.x} {fy(t.v3.y)} Z")
        ET.SubElement(root, "path", {
            "d": " ".join(parts), "fill": "none", "stroke": "#b8cbe0",
            "stroke-width": f"{0.0012 * span}", "class": "delaunay",
        })

    hull_pts = " ".join(f"{v.x},{fy(v.y)}" for v in inst.region.vertices)
    ET.SubElement(root, "polygon", {
        "points": hull_pts, "fill": "none", "stroke": "#333333",
        "stroke-width": f"{0.003 * span}", "class": "region",
    })

    wmax = max(p.weight for p in inst.points)
    base = 0.008 * span
    group = ET.SubElement(root, "g", {"class": "demand-points"})
    for p in inst.points:
        ET.SubElement(group, "circle", {
            "cx": f"{p.location.x}", "cy": f"{fy(p.location.y)}",
            "r": f"{base * p.weight / wmax}", "fill": "#1f5fa8",
            "fill-opacity": "0.8",
        })

    if solution is not None:
        marker = ET.SubElement(root, "g", {"class": "optimum"})
        ET.SubElement(marker, "circle", {
            "cx": f"{solution.x}", "cy": f"{fy(solution.y)}",
            "r": f"{0.015 * span}", "fill": "none", "stroke": "#c1272d",
            "stroke-width": f"{0.004 * span}",
        })

    ET.ElementTree(root).write(path, encoding="unicode",
                               xml_declaration=True)
