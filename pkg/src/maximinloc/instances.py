"""Reproducible benchmark instance generation and CSV instance files.

The generator is a Lehmer-style congruential sequence on the open range
(0, 100000): r_{k+1} = lambda * r_k mod 100000 with an odd multiplier not
divisible by 5. Three independent streams (seeds 97, 367, 12347) drive the
x coordinates, y coordinates and weights; the seed itself is the first value
used, so point 1 of the default streams is (0.0097, 0.0367, w=1.12347).
"""

from __future__ import annotations

from dataclasses import dataclass

from .apollonius import WeightedPoint
from .geom import Point
from .mesh import ConvexPolygon, convex_hull
from .objective import Instance

MODULUS = 100000
DEFAULT_MULTIPLIER = 12219
X_SEED = 97
Y_SEED = 367
W_SEED = 12347
SQUARE_SIDE = 10.0

REGION_KINDS = ("hull", "square")


class InstanceFormatError(ValueError):
    """Malformed instance file."""


@dataclass(frozen=True)
class GeneratorState:
    value: int
    multiplier: int = DEFAULT_MULTIPLIER

    def __post_init__(self) -> None:
        if not 0 < self.value < MODULUS:
            raise ValueError(f"state must lie in (0, {MODULUS}), got {self.value}")
        if self.multiplier % 2 == 0 or self.multiplier % 5 == 0:
            raise ValueError("multiplier must be odd and not divisible by 5")


def lcg_next(s: GeneratorState) -> GeneratorState:
    """Advance the congruential sequence in exact integer arithmetic."""
    nxt = (s.multiplier * s.value) % MODULUS
    if nxt == 0:
        raise ArithmeticError("congruential sequence left the open range")
    return GeneratorState(value=nxt, multiplier=s.multiplier)


@dataclass(frozen=True)
class InstanceSpec:
    n: int
    x_seed: int = X_SEED
    y_seed: int = Y_SEED
    w_seed: int = W_SEED
    region: str = "hull"

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("an instance needs n >= 3")
        if self.region not in REGION_KINDS:
            raise ValueError(f"region must be one of {REGION_KINDS}")


def _stream(seed: int, n: int, multiplier: int = DEFAULT_MULTIPLIER) -> list[int]:
    state = GeneratorState(value=seed, multiplier=multiplier)
    out = [state.value]
    for _ in range(n - 1):
        state = lcg_next(state)
        out.append(state.value)
    return out


def generate_points(n: int, x_seed: int = X_SEED, y_seed: int = Y_SEED,
                    w_seed: int = W_SEED) -> tuple[WeightedPoint, ...]:
    """First n points of the benchmark streams (ids are 1-based)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rx = _stream(x_seed, n)
    ry = _stream(y_seed, n)
    rw = _stream(w_seed, n)
    return tuple(
        WeightedPoint(id=i + 1,
                      location=Point(rx[i] / 10000, ry[i] / 10000),
                      weight=1 + rw[i] / 100000)
        for i in range(n))


def square_region(side: float = SQUARE_SIDE) -> ConvexPolygon:
    return ConvexPolygon(vertices=(Point(0.0, 0.0), Point(side, 0.0),
                                   Point(side, side), Point(0.0, side)))


def make_instance(points: tuple[WeightedPoint, ...] | list[WeightedPoint],
                  region: str = "hull") -> Instance:
    pts = tuple(points)
    if region == "hull":
        poly = convex_hull([p.location for p in pts])
    elif region == "square":
        poly = square_region()
    else:
        raise ValueError(f"region must be one of {REGION_KINDS}")
    return Instance(points=pts, region=poly)


def generate(spec: InstanceSpec) -> Instance:
    return make_instance(
        generate_points(spec.n, spec.x_seed, spec.y_seed, spec.w_seed),
        region=spec.region)


def write_points(points: tuple[WeightedPoint, ...] | list[WeightedPoint],
                 path: str) -> None:
    """Write demand points as CSV at full double precision."""
    lines = ["id,x,y,w"]
    for p in points:
        lines.append(f"{p.id},{p.location.x!r},{p.location.y!r},{p.weight!r}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_instance(inst: Instance, path: str) -> None:
    write_points(inst.points, path)


def read_points(path: str) -> tuple[WeightedPoint, ...]:
    points: list[WeightedPoint] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if lineno == 1 and line.lower() == "id,x,y,w":
                continue
            cols = line.split(",")
            if len(cols) != 4:
                raise InstanceFormatError(
                    f"{path}:{lineno}: expected 4 columns, got {len(cols)}")
            try:
                pid = int(cols[0])
                x, y, w = float(cols[1]), float(cols[2]), float(cols[3])
            except ValueError as exc:
                raise InstanceFormatError(f"{path}:{lineno}: {exc}") from exc
            if not w > 0:
                raise InstanceFormatError(
                    f"{path}:{lineno}: weight must be positive, got {w}")
            points.append(WeightedPoint(id=pid, location=Point(x, y), weight=w))
    if not points:
        raise InstanceFormatError(f"{path}: no demand points found")
    return tuple(points)


def read_instance(path: str, region: str = "hull") -> Instance:
    return make_instance(read_points(path), region=region)
