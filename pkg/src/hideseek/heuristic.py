"""Region-splitting search strategy for the seeker.

The seeker repeatedly visits the unvisited sensor (inside the current
consistent region) closest to the region's centroid, halves the region with
the reported half-plane, and after a fixed measurement budget walks a short
path through the candidate points that remain consistent.  Distances are
accumulated only until the treasure is reached.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from ._util import fmt, iceil
from .errors import InvalidArgument, InvalidTreasure
from .geometry import ConvexRegion, area, centroid, clip, dist
from .pathing import best_path
from .scenario import Scenario, halfplane_of, measure


def optimal_measurement_count(m: int) -> int:
    """Measurement budget minimizing the expected-distance bound for m points.

    ceil(ln(sqrt(2) * ln(3/2) * sqrt(m)) / ln(3/2)), clamped to be nonnegative.
    """
    if m < 1:
        raise InvalidArgument("need at least one candidate point")
    inner = math.sqrt(2.0) * math.log(1.5) * math.sqrt(m)
    return max(0, iceil(math.log(inner) / math.log(1.5)))


def expected_distance_bound(m: int, s: int, k: int, ambient_area: float) -> float:
    """Upper bound on the mean distance traveled by the region-splitting search.

    Valid when the scenario draws m uniform candidates and uses the matched
    sensor count for m; ``k`` is the measurement budget actually used.
    """
    root = math.sqrt(ambient_area)
    return ((2.0 * k + 9.0) / math.sqrt(2.0) + 2.0
            + 2.0 * math.sqrt(m) * (2.0 / 3.0) ** k
            + math.sqrt(2.0) * math.log(m)) * root


def expected_final_area_bound(k: int, s: int, ambient_area: float) -> float:
    """Upper bound on the mean area of the consistent region after k cuts."""
    return ((2.0 / 3.0) ** k + 1.0 / math.sqrt(2.0 * s)) * ambient_area


@dataclass(frozen=True)
class SearchTrace:
    """Everything one run of the search did, in visiting order.

    ``visited`` starts with location 0 (the seeker start) and ends at the
    treasure; ``regions`` holds the consistent region before and after each
    measurement, so ``len(regions) == k_used + 1``.
    """

    visited: tuple[int, ...]
    measurements: tuple[int, ...]
    regions: tuple[ConvexRegion, ...]
    total_distance: float
    k_used: int


def divide_and_search(sc: Scenario, treasure_index: int, k_budget: int) -> SearchTrace:
    """Run the region-splitting search against a fixed treasure placement.

    Measurement phase: up to ``k_budget`` times, visit the unvisited sensor
    inside the current region closest to the region centroid (ties to the
    lowest index), measure, and cut the region.  Stops early when no such
    sensor exists.  Terminal phase: walk a short path through the candidates
    still consistent with every measurement, stopping at the treasure.
    """
    if not 1 <= treasure_index <= sc.m:
        raise InvalidTreasure(f"treasure index {treasure_index} not in 1..{sc.m}")
    if k_budget < 0:
        raise InvalidArgument("measurement budget must be nonnegative")

    treasure = sc.point_at(treasure_index)
    region = sc.region()
    regions = [region]
    measurements: list[int] = []
    visited = [0]
    pos = sc.start
    total = 0.0
    tol = sc.line_tolerance
    unvisited = list(range(sc.m + 1, sc.m + sc.s + 1))

    for _ in range(k_budget):
        inside = [i for i in unvisited
                  if region.strictly_contains(sc.point_at(i))]
        if not inside:
            break
        target = centroid(region)
        choice = min(inside, key=lambda i: (dist(target, sc.point_at(i)), i))
        unvisited.remove(choice)
        point = sc.point_at(choice)
        total += dist(pos, point)
        pos = point
        visited.append(choice)
        sensor = sc.sensors[choice - sc.m - 1]
        result = measure(sensor, treasure, tol)
        measurements.append(result)
        region = clip(region, halfplane_of(sensor, result))
        regions.append(region)

    consistent = [j for j in range(1, sc.m + 1)
                  if region.contains(sc.point_at(j))]
    walk = best_path(pos, [sc.point_at(j) for j in consistent], region, sc.area)
    for oi in walk.order:
        j = consistent[oi]
        point = sc.point_at(j)
        total += dist(pos, point)
        pos = point
        visited.append(j)
        if j == treasure_index:
            break

    return SearchTrace(tuple(visited), tuple(measurements), tuple(regions),
                       total, len(measurements))


def heuristic_security_cost(sc: Scenario, k_budget: int | None = None) -> float:
    """Worst-case travel distance over all treasure placements.

    Uses the bound-minimizing measurement budget unless one is given.
    """
    if k_budget is None:
        k_budget = optimal_measurement_count(sc.m)
    return max(divide_and_search(sc, j, k_budget).total_distance
               for j in range(1, sc.m + 1))


def trace_csv(sc: Scenario, trace: SearchTrace) -> str:
    """One row per visited location: step, index, coordinates, measurement,
    consistent-region area after the step, cumulative distance."""
    lines = ["step,location_index,x,y,measurement,region_area,cumulative_distance"]
    pos = sc.start
    total = 0.0
    for step, idx in enumerate(trace.visited):
        point = sc.point_at(idx)
        total += dist(pos, point)
        pos = point
        if 1 <= step <= trace.k_used:
            meas = str(trace.measurements[step - 1])
            reg_area = area(trace.regions[step])
        else:
            meas = ""
            reg_area = area(trace.regions[min(step, trace.k_used)])
        lines.append(f"{step},{idx},{fmt(point[0])},{fmt(point[1])},{meas},"
                     f"{fmt(reg_area)},{fmt(total)}")
    return "\n".join(lines) + "\n"
