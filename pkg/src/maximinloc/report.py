"""Run reports: a serializable record of one solver invocation."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .geom import Point
from .objective import Instance, evaluate
from .solvers import Solution

# printed columns for the CSV flavors, in order
CSV_COLUMNS = ("instance", "n", "region", "method", "epsilon", "starts",
               "seed", "x", "y", "objective", "phase1_lb", "phase1_ub",
               "phase1_remaining", "max_queue", "iterations",
               "boundary_candidates", "triplets", "objective_calls", "hits",
               "elapsed")


@dataclass(frozen=True)
class RunReport:
    instance: str
    n: int
    region: str
    method: str
    x: float
    y: float
    objective: float
    stats: dict
    elapsed: float
    epsilon: float | None = None
    starts: int | None = None
    seed: int | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls(**json.loads(text))

    def to_csv(self) -> str:
        """Single-row CSV with locations/objective at 5 decimals."""
        row = {
            "instance": self.instance,
            "n": self.n,
            "region": self.region,
            "method": self.method,
            "epsilon": self.epsilon,
            "starts": self.starts,
            "seed": self.seed,
            "x": f"{self.x:.5f}",
            "y": f"{self.y:.5f}",
            "objective": f"{self.objective:.5f}",
            "elapsed": f"{self.elapsed:.4f}",
        }
        for key in ("phase1_lb", "phase1_ub"):
            value = self.stats.get(key)
            row[key] = "" if value is None else f"{value:.5f}"
        for key in ("phase1_remaining", "max_queue", "iterations",
                    "boundary_candidates", "triplets", "objective_calls",
                    "hits"):
            value = self.stats.get(key)
            row[key] = "" if value is None else str(value)
        header = ",".join(CSV_COLUMNS)
        body = ",".join("" if row.get(c) is None else str(row[c])
                        for c in CSV_COLUMNS)
        return header + "\n" + body + "\n"


def build_report(instance_path: str, inst: Instance, region: str, method: str,
                 solution: Solution, epsilon: float | None = None,
                 starts: int | None = None, seed: int | None = None) -> RunReport:
    stats = {k: v for k, v in asdict(solution.stats).items() if v is not None}
    return RunReport(instance=instance_path, n=inst.n, region=region,
                     method=method, x=solution.location.x,
                     y=solution.location.y, objective=solution.objective,
                     stats=stats, elapsed=solution.stats.elapsed,
                     epsilon=epsilon, starts=starts, seed=seed)


def check_report(report: RunReport, inst: Instance,
                 tol: float = 1e-12) -> bool:
    """Re-evaluate the reported location against the instance."""
    value = evaluate(Point(report.x, report.y), inst)
    return abs(value - report.objective) <= tol * max(1.0, abs(value))
