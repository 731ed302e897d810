"""The zero-sum matrix game between hider and seeker.

The hider's pure strategies are the ``m`` candidate placements.  A seeker
pure strategy is a deterministic policy mapping each observation history to
the next unvisited location; policies are identified by a 64-bit seed, and
the action in a state is read off a chained hash of the history, uniform
over the unvisited locations.  Matrix entries are the negated travel cost of
simulating a policy against a placement (both players then maximize).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ._util import fmt
from .errors import Exhausted, InvalidArgument, InvalidTreasure
from .rng import chain, label64
from .scenario import Scenario

EMPTY_MEASUREMENT = 0
_POLICY_LABEL = label64("seeker-policy")


@dataclass(frozen=True)
class InfoState:
    """Observation history: (location, measurement) pairs, oldest first.

    The initial state is the single pair ``(0, 0)``: the seeker stands at
    location 0 having measured nothing.  Non-sensor visits record
    measurement 0; sensor visits record the reported sign.
    """

    steps: tuple[tuple[int, int], ...]

    @staticmethod
    def initial() -> "InfoState":
        return InfoState(((0, EMPTY_MEASUREMENT),))

    def extended(self, location: int, measurement: int = EMPTY_MEASUREMENT) -> "InfoState":
        return InfoState(self.steps + ((location, measurement),))

    def visited(self) -> frozenset[int]:
        return frozenset(loc for loc, _ in self.steps)


@dataclass(frozen=True)
class SeekerPolicy:
    """A deterministic seeker policy identified by its seed."""

    policy_seed: int


def _fold(state: int, location: int, measurement: int) -> int:
    # tokens 4*loc + {0,1,2} are unique per (location, measurement) pair
    return chain(state, location * 4 + measurement + 1)


def policy_action(policy: SeekerPolicy, info: InfoState, sc: Scenario) -> int:
    """Next location under the policy: hash the history, pick uniformly
    among unvisited locations in ascending-index order."""
    seen = info.visited()
    options = [i for i in range(1, sc.location_count + 1) if i not in seen]
    if not options:
        raise Exhausted("no unvisited location remains")
    state = chain(policy.policy_seed, _POLICY_LABEL)
    for location, measurement in info.steps:
        state = _fold(state, location, measurement)
    return options[state % len(options)]


class _SimContext:
    """Per-scenario tables for the simulation hot loop."""

    __slots__ = ("points", "m", "count", "sensor_data", "tol")

    def __init__(self, sc: Scenario) -> None:
        self.points = [sc.point_at(i) for i in range(sc.location_count + 1)]
        self.m = sc.m
        self.count = sc.location_count
        self.sensor_data = [(sn.position[0], sn.position[1],
                             sn.normal[0], sn.normal[1]) for sn in sc.sensors]
        self.tol = sc.line_tolerance


def _walk(ctx: _SimContext, policy_seed: int, treasure_index: int,
          collect: bool = False):
    """Simulate one policy against one placement; returns
    (visits, measurements, cost), the first two None unless ``collect``."""
    state = chain(policy_seed, _POLICY_LABEL)
    state = _fold(state, 0, EMPTY_MEASUREMENT)
    options = list(range(1, ctx.count + 1))
    points = ctx.points
    px, py = points[0]
    tx, ty = points[treasure_index]
    m = ctx.m
    cost = 0.0
    visits = [0] if collect else None
    measurements = [] if collect else None
    while True:
        loc = options[state % len(options)]
        ax, ay = points[loc]
        cost += math.hypot(ax - px, ay - py)
        px, py = ax, ay
        if collect:
            visits.append(loc)
        if loc == treasure_index:
            return visits, measurements, cost
        if loc > m:
            sx, sy, nx, ny = ctx.sensor_data[loc - m - 1]
            meas = 1 if nx * (tx - sx) + ny * (ty - sy) > 0.0 else -1
            if collect:
                measurements.append(meas)
        else:
            meas = EMPTY_MEASUREMENT
        options.remove(loc)
        state = _fold(state, loc, meas)


def simulate_policy(sc: Scenario, policy: SeekerPolicy, treasure_index: int) -> float:
    """Travel cost of running the policy until it reaches the treasure."""
    if not 1 <= treasure_index <= sc.m:
        raise InvalidTreasure(f"treasure index {treasure_index} not in 1..{sc.m}")
    return _walk(_SimContext(sc), policy.policy_seed, treasure_index)[2]


def replay_policy(sc: Scenario, policy: SeekerPolicy,
                  treasure_index: int) -> tuple[list[int], list[int], float]:
    """Like ``simulate_policy`` but also returns visits and measurements."""
    if not 1 <= treasure_index <= sc.m:
        raise InvalidTreasure(f"treasure index {treasure_index} not in 1..{sc.m}")
    visits, measurements, cost = _walk(_SimContext(sc), policy.policy_seed,
                                       treasure_index, collect=True)
    return visits, measurements, cost


@dataclass(frozen=True)
class GameMatrix:
    """Payoff matrix: rows are placements 1..m, columns sampled policies."""

    entries: np.ndarray
    column_seeds: tuple[int, ...]

    @property
    def m(self) -> int:
        return self.entries.shape[0]


def build_matrix(sc: Scenario, policy_seeds: Sequence[int]) -> GameMatrix:
    """Evaluate every placement against every policy seed.

    Entry (i, j) is minus the travel cost of policy ``policy_seeds[j]``
    against placement ``i + 1``; columns keep the seed order given.
    """
    if not policy_seeds:
        raise InvalidArgument("need at least one policy seed")
    ctx = _SimContext(sc)
    entries = np.empty((sc.m, len(policy_seeds)))
    for j, seed in enumerate(policy_seeds):
        for i in range(1, sc.m + 1):
            entries[i - 1, j] = -_walk(ctx, seed, i)[2]
    return GameMatrix(entries, tuple(int(s) for s in policy_seeds))


def matrix_csv(gm: GameMatrix) -> str:
    """CSV with one row per placement; header names columns by policy seed."""
    header = "treasure_index," + ",".join(f"policy_{s}" for s in gm.column_seeds)
    lines = [header]
    for i, row in enumerate(gm.entries, start=1):
        lines.append(f"{i}," + ",".join(fmt(v) for v in row))
    return "\n".join(lines) + "\n"
