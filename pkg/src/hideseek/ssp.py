"""Sampled security levels with probabilistic guarantees.

Instead of the full (astronomically wide) policy matrix, the row player
solves a game restricted to ``n1`` sampled policy columns, giving a security
level and strategy that are probably approximately secure: the chance that a
fresh policy beats the sampled level is at most ``delta`` with confidence
``1 - beta``.  Two certificates are supported: an a-priori sample count, and
an a-posteriori check of the sampled strategy against ``k1`` fresh columns.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from ._util import fmt, iceil
from .errors import InvalidArgument
from .game import build_matrix
from .rng import seed_stream
from .scenario import Scenario
from .solver import best_pure_response, sampled_security_level, solve_zero_sum


def apriori_n1(m1: int, delta: float, nbar2: int, beta: float | None = None) -> int:
    """Sampled-column count sufficient for a level-``delta`` guarantee.

    Without ``beta`` the guarantee holds in expectation:
    ``ceil((m1 + 1) / delta - 1) * nbar2``.  With ``beta`` it holds with
    probability ``1 - beta``:
    ``ceil((ln(1/beta) + m1 + 2*sqrt(m1*ln(1/beta))) / delta) * nbar2``.
    """
    _check_counts(m1, delta, nbar2, beta)
    if beta is None:
        return iceil((m1 + 1) / delta - 1.0) * nbar2
    log_term = math.log(1.0 / beta)
    return iceil((log_term + m1 + 2.0 * math.sqrt(m1 * log_term)) / delta) * nbar2


def aposteriori_k1(delta: float, nbar2: int, beta: float | None = None) -> int:
    """Fresh-column count for the a-posteriori certificate.

    Without ``beta``: ``ceil(1/delta - 1) * nbar2`` (guarantee in
    expectation).  With ``beta``: ``ceil(ln(1/beta) / ln(1/(1-delta))) *
    nbar2`` (holds with probability ``1 - beta``).  Requires ``delta < 1``.
    """
    _check_counts(1, delta, nbar2, beta)
    if delta >= 1.0:
        raise InvalidArgument("the a-posteriori certificate needs delta < 1")
    if beta is None:
        return iceil(1.0 / delta - 1.0) * nbar2
    return iceil(math.log(1.0 / beta) / math.log(1.0 / (1.0 - delta))) * nbar2


def _check_counts(m1: int, delta: float, nbar2: int, beta: float | None) -> None:
    if m1 < 1:
        raise InvalidArgument("m1 must be at least 1")
    if not 0.0 < delta <= 1.0:
        raise InvalidArgument("delta must lie in (0, 1]")
    if nbar2 < 1:
        raise InvalidArgument("nbar2 must be at least 1")
    if beta is not None and not 0.0 < beta < 1.0:
        raise InvalidArgument("beta must lie in (0, 1)")


def quantile(samples, alpha: float) -> float:
    """Empirical ``alpha``-quantile: the ``ceil(alpha * n)``-th order statistic."""
    values = sorted(float(v) for v in samples)
    if not values:
        raise InvalidArgument("quantile needs at least one sample")
    if not 0.0 < alpha <= 1.0:
        raise InvalidArgument("alpha must lie in (0, 1]")
    rank = max(1, iceil(alpha * len(values)))
    return values[rank - 1]


@dataclass(frozen=True)
class SampleSizes:
    """Column counts and guarantee parameters for one sampled-game run."""

    m1: int
    n1: int
    n2: int
    nbar2: int
    delta: float
    beta: float | None = None
    k1: int | None = None

    def validate(self) -> None:
        _check_counts(self.m1, self.delta, self.nbar2, self.beta)
        if self.n1 < 1:
            raise InvalidArgument("n1 must be at least 1")
        if not 1 <= self.n2 <= self.nbar2:
            raise InvalidArgument("n2 must lie in 1..nbar2")
        if self.k1 is not None and self.k1 < 1:
            raise InvalidArgument("k1 must be at least 1 when given")


@dataclass(frozen=True)
class SspReport:
    """Result of one sampled-game run (plus optional a-posteriori stage)."""

    seed: int
    m: int
    s: int
    sizes: SampleSizes
    v_bar_level: float
    y_star: np.ndarray
    z_star_seeds: tuple[int, ...]
    z_star_weights: np.ndarray
    outcome: float
    v_posterior: float | None = None
    epsilon: float | None = None


def ssp_run(sc: Scenario, sizes: SampleSizes, seed: int) -> SspReport:
    """Solve the two sampled games and evaluate the resulting strategy pair.

    The row player secures against ``n1`` policies sampled from the stream
    labeled ``pi1``; the column player solves the full game restricted to
    ``n2`` policies from stream ``pi2``.  ``outcome`` is the expected payoff
    of playing the two strategies against each other.
    """
    sizes.validate()
    if sizes.m1 != sc.m:
        raise InvalidArgument(f"sizes.m1={sizes.m1} does not match scenario m={sc.m}")
    row_game = build_matrix(sc, seed_stream(seed, "pi1", sizes.n1))
    v_bar, y_star = sampled_security_level(row_game.entries)
    col_game = build_matrix(sc, seed_stream(seed, "pi2", sizes.n2))
    col_solution = solve_zero_sum(col_game.entries)
    outcome = float(y_star @ col_game.entries @ col_solution.col_strategy)
    return SspReport(seed, sc.m, sc.s, sizes, float(v_bar), y_star,
                     col_game.column_seeds, col_solution.col_strategy, outcome)


def aposteriori_run(sc: Scenario, sizes: SampleSizes, seed: int) -> SspReport:
    """``ssp_run`` plus the a-posteriori check against ``k1`` fresh columns.

    ``v_posterior`` is the best fresh column's payoff against the sampled
    strategy; ``epsilon = v_posterior - v_bar_level`` measures how far the
    sampled level is from holding up (nonpositive means it held exactly).
    """
    if sizes.k1 is None:
        raise InvalidArgument("aposteriori_run needs sizes.k1")
    report = ssp_run(sc, sizes, seed)
    fresh = build_matrix(sc, seed_stream(seed, "pibar1", sizes.k1))
    _, v_post = best_pure_response(fresh.entries, report.y_star)
    return replace(report, v_posterior=float(v_post),
                   epsilon=float(v_post - report.v_bar_level))


REPORT_CSV_HEADER = "seed,m,s,n1,n2,k1,delta,beta,v_bar,v_posterior,epsilon,outcome"


def report_csv_row(report: SspReport) -> str:
    sizes = report.sizes
    cells = [
        str(report.seed), str(report.m), str(report.s),
        str(sizes.n1), str(sizes.n2),
        "" if sizes.k1 is None else str(sizes.k1),
        fmt(sizes.delta),
        "" if sizes.beta is None else fmt(sizes.beta),
        fmt(report.v_bar_level),
        "" if report.v_posterior is None else fmt(report.v_posterior),
        "" if report.epsilon is None else fmt(report.epsilon),
        fmt(report.outcome),
    ]
    return ",".join(cells)


def report_csv(reports) -> str:
    lines = [REPORT_CSV_HEADER]
    lines.extend(report_csv_row(r) for r in reports)
    return "\n".join(lines) + "\n"
