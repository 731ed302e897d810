"""Game instances: a square region, candidate treasure points, and sensors.

A sensor sits at a fixed position with a unit normal and, when visited,
reports which side of its line the treasure lies on.  Scenario generation
guarantees every candidate point stays clear of every sensor line so that
measurements are never ambiguous.

Locations are indexed ``0`` (seeker start, the region center), ``1..m``
(candidate treasure points), ``m+1..m+s`` (sensors).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._util import fmt, iceil
from .errors import (DegenerateMeasurement, GenerationFailed, InvalidArgument)
from .geometry import ConvexRegion, HalfPlane, Point
from .rng import MASK64, derive_seed, label64

# A candidate within 1e-9 * region_side of a sensor line is too close to call.
LINE_TOL_FACTOR = 1e-9
_MAX_REDRAWS = 100


@dataclass(frozen=True)
class Sensor:
    position: Point
    normal: Point

    def __post_init__(self) -> None:
        norm = math.hypot(self.normal[0], self.normal[1])
        if not math.isfinite(norm) or abs(norm - 1.0) > 1e-12:
            raise InvalidArgument(f"sensor normal must be unit length, got {norm!r}")


@dataclass(frozen=True)
class Scenario:
    region_side: float
    candidates: tuple[Point, ...]
    sensors: tuple[Sensor, ...]
    start: Point
    seed: int

    @property
    def m(self) -> int:
        return len(self.candidates)

    @property
    def s(self) -> int:
        return len(self.sensors)

    @property
    def location_count(self) -> int:
        return self.m + self.s

    @property
    def area(self) -> float:
        return self.region_side * self.region_side

    @property
    def line_tolerance(self) -> float:
        return LINE_TOL_FACTOR * self.region_side

    def region(self) -> ConvexRegion:
        return ConvexRegion.square(self.region_side)

    def point_at(self, index: int) -> Point:
        """Coordinates of location ``index`` (0 start, 1..m candidates, rest sensors)."""
        if index == 0:
            return self.start
        if 1 <= index <= self.m:
            return self.candidates[index - 1]
        if self.m < index <= self.m + self.s:
            return self.sensors[index - self.m - 1].position
        raise InvalidArgument(f"location index {index} out of range")

    def is_sensor_index(self, index: int) -> bool:
        return self.m < index <= self.m + self.s


def sensor_count(m: int) -> int:
    """Default number of sensors for ``m`` candidate points: ceil(m / ln(m)^2)."""
    if m < 2:
        raise InvalidArgument("sensor_count needs m >= 2")
    return iceil(m / math.log(m) ** 2)


def place_sensors_rect(region_side: float, s: int, seed: int) -> tuple[Sensor, ...]:
    """Put ``s`` sensors at the centers of a near-square grid of cells.

    The grid has round(sqrt(s)) rows and ceil(s / rows) columns; cells are
    filled row-major, so the last row may stay partially empty.  Normals are
    drawn uniformly on the circle from ``seed``.
    """
    if region_side <= 0 or not math.isfinite(region_side):
        raise InvalidArgument("region_side must be positive and finite")
    if s < 0:
        raise InvalidArgument("sensor count must be nonnegative")
    if s == 0:
        return ()
    rows = max(1, round(math.sqrt(s)))
    cols = iceil(s / rows)
    cell_w = region_side / cols
    cell_h = region_side / rows
    rng = np.random.default_rng(seed & MASK64)
    angles = rng.uniform(0.0, 2.0 * math.pi, s)
    sensors = []
    for k in range(s):
        row, col = divmod(k, cols)
        pos = ((col + 0.5) * cell_w, (row + 0.5) * cell_h)
        sensors.append(Sensor(pos, (math.cos(angles[k]), math.sin(angles[k]))))
    return tuple(sensors)


def generate_scenario(region_side: float, m: int, s: int, seed: int) -> Scenario:
    """Random scenario: uniform candidates, grid sensors, start at the center.

    Candidate/sensor-line incidences are repaired by redrawing the offending
    sensor's normal, up to 100 attempts per sensor; persistent incidence
    raises ``GenerationFailed``.  Same inputs give bit-identical scenarios.
    """
    if region_side <= 0 or not math.isfinite(region_side):
        raise InvalidArgument("region_side must be positive and finite")
    if m < 1:
        raise InvalidArgument("need at least one candidate point")
    if s < 0:
        raise InvalidArgument("sensor count must be nonnegative")

    cand_rng = np.random.default_rng([seed & MASK64, label64("scenario-candidates")])
    pts = cand_rng.uniform(0.0, region_side, size=(m, 2))
    candidates = tuple((float(x), float(y)) for x, y in pts)

    sensors = list(place_sensors_rect(region_side, s, derive_seed(seed, "scenario-sensors")))
    tol = LINE_TOL_FACTOR * region_side
    redraw_rng = np.random.default_rng([seed & MASK64, label64("scenario-redraw")])
    for i, sensor in enumerate(sensors):
        attempts = 0
        while _touches_line(sensor, candidates, tol):
            attempts += 1
            if attempts > _MAX_REDRAWS:
                raise GenerationFailed(
                    f"sensor {i} keeps intersecting a candidate after {_MAX_REDRAWS} redraws")
            angle = float(redraw_rng.uniform(0.0, 2.0 * math.pi))
            sensor = Sensor(sensor.position, (math.cos(angle), math.sin(angle)))
        sensors[i] = sensor

    start = (region_side / 2.0, region_side / 2.0)
    return Scenario(region_side, candidates, tuple(sensors), start, seed)


def _touches_line(sensor: Sensor, candidates: tuple[Point, ...], tol: float) -> bool:
    px, py = sensor.position
    nx, ny = sensor.normal
    return any(abs(nx * (x - px) + ny * (y - py)) <= tol for x, y in candidates)


def measure(sensor: Sensor, treasure: Point, tol: float = 1e-9) -> int:
    """Side of the sensor line the treasure lies on: +1 or -1.

    Raises ``DegenerateMeasurement`` when the treasure is within ``tol`` of
    the line; generated scenarios never trigger this.
    """
    nx, ny = sensor.normal
    d = nx * (treasure[0] - sensor.position[0]) + ny * (treasure[1] - sensor.position[1])
    if abs(d) <= tol:
        raise DegenerateMeasurement("treasure lies on the sensor line")
    return 1 if d > 0 else -1


def halfplane_of(sensor: Sensor, measurement: int) -> HalfPlane:
    """Half-plane consistent with a sensor's reported measurement."""
    if measurement not in (1, -1):
        raise InvalidArgument("measurement must be +1 or -1")
    nx, ny = sensor.normal
    return HalfPlane(sensor.position, (measurement * nx, measurement * ny))


def max_min_distance(region_side: float, sensors: tuple[Sensor, ...], grid: int = 200) -> float:
    """Worst distance from a region point to its nearest sensor (grid-sampled)."""
    if not sensors:
        raise InvalidArgument("need at least one sensor")
    ticks = (np.arange(grid) + 0.5) * (region_side / grid)
    xs, ys = np.meshgrid(ticks, ticks)
    best = np.full(xs.shape, np.inf)
    for sensor in sensors:
        px, py = sensor.position
        np.minimum(best, np.hypot(xs - px, ys - py), out=best)
    return float(best.max())


def scenario_record(sc: Scenario) -> str:
    """Serialize a scenario to CSV with 17-significant-digit coordinates."""
    lines = ["role,index,x,y,nx,ny"]
    lines.append(f"meta,{sc.seed},{fmt(sc.region_side)},,,")
    lines.append(f"start,0,{fmt(sc.start[0])},{fmt(sc.start[1])},,")
    for i, (x, y) in enumerate(sc.candidates, start=1):
        lines.append(f"candidate,{i},{fmt(x)},{fmt(y)},,")
    for k, sensor in enumerate(sc.sensors, start=sc.m + 1):
        px, py = sensor.position
        nx, ny = sensor.normal
        lines.append(f"sensor,{k},{fmt(px)},{fmt(py)},{fmt(nx)},{fmt(ny)}")
    return "\n".join(lines) + "\n"


def parse_scenario_record(text: str) -> Scenario:
    """Inverse of ``scenario_record`` (bit-exact round trip)."""
    rows = [line.split(",") for line in text.strip().splitlines()]
    if not rows or rows[0][0] != "role":
        raise InvalidArgument("not a scenario record")
    seed = None
    region_side = None
    start = None
    candidates: list[Point] = []
    sensors: list[Sensor] = []
    for row in rows[1:]:
        role = row[0]
        if role == "meta":
            seed = int(row[1])
            region_side = float(row[2])
        elif role == "start":
            start = (float(row[2]), float(row[3]))
        elif role == "candidate":
            candidates.append((float(row[2]), float(row[3])))
        elif role == "sensor":
            sensors.append(Sensor((float(row[2]), float(row[3])),
                                  (float(row[4]), float(row[5]))))
        else:
            raise InvalidArgument(f"unknown record role {role!r}")
    if seed is None or region_side is None or start is None:
        raise InvalidArgument("scenario record is missing its meta or start row")
    return Scenario(region_side, tuple(candidates), tuple(sensors), start, seed)
