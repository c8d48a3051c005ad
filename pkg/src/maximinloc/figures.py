"""Matplotlib figure rendering for the benchmark report path."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .geom import Point
from .objective import Instance


def render_instance_figure(inst: Instance, path: str,
                           solution: Point | None = None,
                           title: str | None = None) -> None:
    """Scatter of the demand points (sized by weight) with the feasible
    region outline and, when given, the optimum marker; saved to `path`."""
    fig, ax = plt.subplots(figsize=(6, 6))
    xs = [p.location.x for p in inst.points]
    ys = [p.location.y for p in inst.points]
    wmax = max(p.weight for p in inst.points)
    sizes = [40.0 * p.weight / wmax for p in inst.points]
    ax.scatter(xs, ys, s=sizes, c="#1f5fa8", alpha=0.8, linewidths=0,
               label="demand points")

    rx = [v.x for v in inst.region.vertices]
    ry = [v.y for v in inst.region.vertices]
    ax.plot(rx + rx[:1], ry + ry[:1], color="#333333", linewidth=1.2,
            label="feasible region")

    if solution is not None:
        ax.plot([solution.x], [solution.y], marker="o", markersize=12,
                markerfacecolor="none", markeredgecolor="#c1272d",
                markeredgewidth=2, linestyle="none", label="optimum")

    ax.set_aspect("equal")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    if title:
        ax.set_title(title)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
