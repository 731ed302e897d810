"""Reproducible Monte Carlo experiment harnesses.

Every harness consumes an ``ExperimentConfig``, derives all randomness from
``master_seed`` through labeled streams, and emits CSV text.  Trials are
independent tasks keyed by (label, indices), so results are identical no
matter how many workers run them or in what order they finish.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._util import fmt
from .errors import InvalidArgument
from .game import build_matrix
from .geometry import area
from .heuristic import (divide_and_search, expected_distance_bound,
                        expected_final_area_bound, heuristic_security_cost,
                        optimal_measurement_count)
from .pathing import best_path
from .rng import MASK64, derive_seed, label64, seed_stream
from .scenario import generate_scenario, scenario_record, sensor_count
from .solver import sampled_security_level
from .ssp import aposteriori_k1, quantile

DEFAULT_N1_SWEEP = (10, 50, 100, 500)
DEFAULT_DELTAS = (0.02, 0.1)
DEFAULT_M_VALUES = (50, 200, 1000)


@dataclass(frozen=True)
class ExperimentConfig:
    """Knobs shared by the experiment harnesses.

    ``s=None`` means "derive the sensor count from m".  ``workers`` only
    controls parallelism, never results.  ``output`` is a destination hint
    for clients; the harnesses themselves just return CSV text.
    """

    region_side: float = 50.0
    m: int = 10
    s: int | None = None
    trials: int = 200
    alpha: float = 0.9
    deltas: tuple[float, ...] = DEFAULT_DELTAS
    beta: float | None = 2e-5
    nbar2: int = 10
    n1_sweep: tuple[int, ...] = DEFAULT_N1_SWEEP
    geometries: int = 30
    m_values: tuple[int, ...] = DEFAULT_M_VALUES
    master_seed: int = 0
    workers: int = 1
    output: str | None = None

    def validate(self) -> None:
        if self.region_side <= 0 or not math.isfinite(self.region_side):
            raise InvalidArgument("region_side must be positive and finite")
        if self.m < 1:
            raise InvalidArgument("m must be at least 1")
        if self.s is not None and self.s < 0:
            raise InvalidArgument("s must be nonnegative")
        if self.trials < 1:
            raise InvalidArgument("trials must be at least 1")
        if not 0.0 < self.alpha <= 1.0:
            raise InvalidArgument("alpha must lie in (0, 1]")
        if not self.deltas or any(not 0.0 < d < 1.0 for d in self.deltas):
            raise InvalidArgument("each delta must lie in (0, 1)")
        if self.beta is not None and not 0.0 < self.beta < 1.0:
            raise InvalidArgument("beta must lie in (0, 1)")
        if self.nbar2 < 1:
            raise InvalidArgument("nbar2 must be at least 1")
        if not self.n1_sweep or any(n < 1 for n in self.n1_sweep):
            raise InvalidArgument("n1 sweep entries must be at least 1")
        if self.geometries < 1:
            raise InvalidArgument("geometries must be at least 1")
        if not self.m_values or any(v < 2 for v in self.m_values):
            raise InvalidArgument("m_values entries must be at least 2")
        if self.workers < 1:
            raise InvalidArgument("workers must be at least 1")

    def resolved_s(self, m: int | None = None) -> int:
        if self.s is not None:
            return self.s
        return sensor_count(self.m if m is None else m)


def _run_tasks(fn, tasks: list, workers: int) -> list:
    """Map ``fn`` over tasks, preserving order; fork workers only if asked."""
    if workers <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * workers))))


def _stderr(values: np.ndarray) -> float:
    if values.size < 2:
        return 0.0
    return float(values.std(ddof=1) / math.sqrt(values.size))


def _geometry_seed(master_seed: int, index: int) -> int:
    return derive_seed(master_seed, "geometry", index)


# ---------------------------------------------------------------- quantiles

def _quantile_trial(task) -> tuple[float, tuple[float, ...]]:
    sc, n1, k1s, trial_seed = task
    row_game = build_matrix(sc, seed_stream(trial_seed, "pi1", n1))
    v_bar, y_star = sampled_security_level(row_game.entries)
    fresh = build_matrix(sc, seed_stream(trial_seed, "pibar1", max(k1s)))
    payoffs = y_star @ fresh.entries
    running = np.maximum.accumulate(payoffs)
    return float(v_bar), tuple(float(running[k - 1]) for k in k1s)


def run_quantile_curves(cfg: ExperimentConfig) -> str:
    """Empirical quantiles of sampled security levels across trials.

    For each ``n1`` in the sweep, runs ``trials`` independent sampled games
    on one fixed scenario and reports the ``alpha``-quantile of the sampled
    level (kind ``v_bar``), plus, per ``delta``, the quantile of the
    a-posteriori level against ``k1(delta)`` fresh columns (kind
    ``v_posterior``).
    """
    cfg.validate()
    sc = generate_scenario(cfg.region_side, cfg.m, cfg.resolved_s(),
                           _geometry_seed(cfg.master_seed, 0))
    k1s = tuple(aposteriori_k1(d, cfg.nbar2) for d in cfg.deltas)
    tasks = [(sc, n1, k1s, derive_seed(cfg.master_seed, "quantile-trial", n1, t))
             for n1 in cfg.n1_sweep for t in range(cfg.trials)]
    results = _run_tasks(_quantile_trial, tasks, cfg.workers)

    lines = ["kind,n1,k1,delta,alpha,trials,quantile,quantile_stderr,mean,mean_stderr"]
    pos = 0
    for n1 in cfg.n1_sweep:
        chunk = results[pos:pos + cfg.trials]
        pos += cfg.trials
        v_bars = np.array([r[0] for r in chunk])
        lines.append(_quantile_row("v_bar", n1, "", "", cfg, v_bars))
        for d_idx, delta in enumerate(cfg.deltas):
            posts = np.array([r[1][d_idx] for r in chunk])
            lines.append(_quantile_row("v_posterior", n1, str(k1s[d_idx]),
                                       fmt(delta), cfg, posts))
    return "\n".join(lines) + "\n"


def _quantile_row(kind: str, n1: int, k1: str, delta: str,
                  cfg: ExperimentConfig, values: np.ndarray) -> str:
    q = quantile(values, cfg.alpha)
    return ",".join([
        kind, str(n1), k1, delta, fmt(cfg.alpha), str(cfg.trials),
        fmt(q), fmt(_quantile_stderr(values, cfg.alpha)),
        fmt(values.mean()), fmt(_stderr(values)),
    ])


def _quantile_stderr(values: np.ndarray, alpha: float) -> float:
    """Order-statistic spread of the empirical quantile (binomial CI width)."""
    n = values.size
    if n < 2:
        return 0.0
    ordered = np.sort(values)
    half = 1.96 * math.sqrt(alpha * (1.0 - alpha) / n)
    lo = min(n, max(1, math.ceil(n * (alpha - half))))
    hi = min(n, max(1, math.ceil(n * (alpha + half))))
    return float((ordered[hi - 1] - ordered[lo - 1]) / (2.0 * 1.96))


# --------------------------------------------------------------- comparison

def _compare_geometry(task) -> tuple[int, int, float, float, list[float]]:
    cfg, index = task
    scen_seed = _geometry_seed(cfg.master_seed, index)
    sc = generate_scenario(cfg.region_side, cfg.m, cfg.resolved_s(), scen_seed)
    heuristic_value = -heuristic_security_cost(sc)
    tour = best_path(sc.start, list(sc.candidates), sc.region(), sc.area)
    tour_value = -tour.length
    quantiles = []
    for n1 in cfg.n1_sweep:
        levels = []
        for t in range(cfg.trials):
            trial_seed = derive_seed(cfg.master_seed, "compare-trial", index, n1, t)
            game = build_matrix(sc, seed_stream(trial_seed, "pi1", n1))
            level, _ = sampled_security_level(game.entries)
            levels.append(level)
        quantiles.append(quantile(levels, cfg.alpha))
    return index, scen_seed, heuristic_value, tour_value, quantiles


def run_comparison(cfg: ExperimentConfig) -> str:
    """Per-geometry comparison of three hider-side value estimates.

    For each random geometry: the negated worst-case cost of the
    region-splitting search, the negated exhaustive tour through all
    candidates, and the ``alpha``-quantile of the sampled security level for
    each ``n1``.  A final ``mean`` row averages every numeric column.
    """
    cfg.validate()
    tasks = [(cfg, g) for g in range(cfg.geometries)]
    rows = _run_tasks(_compare_geometry, tasks, cfg.workers)

    header = ["geometry_id", "scenario_seed", "heuristic_value", "tour_value"]
    header += [f"v_bar_q{_alpha_tag(cfg.alpha)}_n1_{n1}" for n1 in cfg.n1_sweep]
    lines = [",".join(header)]
    for index, scen_seed, heur, tour, quants in rows:
        cells = [str(index), str(scen_seed), fmt(heur), fmt(tour)]
        cells += [fmt(q) for q in quants]
        lines.append(",".join(cells))
    heur_mean = float(np.mean([r[2] for r in rows]))
    tour_mean = float(np.mean([r[3] for r in rows]))
    quant_means = [float(np.mean([r[4][i] for r in rows]))
                   for i in range(len(cfg.n1_sweep))]
    lines.append(",".join(["mean", "", fmt(heur_mean), fmt(tour_mean)]
                          + [fmt(v) for v in quant_means]))
    return "\n".join(lines) + "\n"


def _alpha_tag(alpha: float) -> str:
    tag = f"{alpha:g}"
    return tag.replace(".", "p").replace("-", "m")


# ------------------------------------------------------------- bound checks

def _bounds_trial(task) -> tuple[float, float]:
    region_side, m, s, k, seed = task
    sc = generate_scenario(region_side, m, s, seed)
    rng = np.random.default_rng([seed & MASK64, label64("bounds-treasure")])
    treasure_index = int(rng.integers(1, m + 1))
    trace = divide_and_search(sc, treasure_index, k)
    return trace.total_distance, area(trace.regions[-1])


def run_heuristic_bounds(cfg: ExperimentConfig) -> str:
    """Monte Carlo means of the region-splitting search against its bounds.

    For each ``m`` in ``m_values``: sample ``trials`` scenarios with the
    matched sensor count, run the search against a uniformly chosen
    placement, and report mean distance and mean final region area next to
    their analytic upper bounds.
    """
    cfg.validate()
    lines = ["m,s,k,trials,mean_distance,stderr_distance,distance_bound,"
             "mean_final_area,stderr_final_area,final_area_bound"]
    ambient = cfg.region_side * cfg.region_side
    for m in cfg.m_values:
        s = cfg.resolved_s(m)
        k = optimal_measurement_count(m)
        tasks = [(cfg.region_side, m, s, k,
                  derive_seed(cfg.master_seed, "bounds-trial", m, t))
                 for t in range(cfg.trials)]
        results = _run_tasks(_bounds_trial, tasks, cfg.workers)
        distances = np.array([r[0] for r in results])
        areas = np.array([r[1] for r in results])
        lines.append(",".join([
            str(m), str(s), str(k), str(cfg.trials),
            fmt(distances.mean()), fmt(_stderr(distances)),
            fmt(expected_distance_bound(m, s, k, ambient)),
            fmt(areas.mean()), fmt(_stderr(areas)),
            fmt(expected_final_area_bound(k, s, ambient)),
        ]))
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------ scenario dump

def scenario_dump(cfg: ExperimentConfig) -> str:
    """Record of the first experiment geometry under this configuration."""
    cfg.validate()
    sc = generate_scenario(cfg.region_side, cfg.m, cfg.resolved_s(),
                           _geometry_seed(cfg.master_seed, 0))
    return scenario_record(sc)
