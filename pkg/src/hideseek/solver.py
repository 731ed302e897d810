"""Security levels and optimal mixed strategies of finite zero-sum games.

Convention: the row player picks i to minimize, the column player picks j to
maximize, and ``value = min_y max_z y' A z`` over mixed strategies.  Two
independent routes are exposed on purpose:

* ``solve_zero_sum`` solves the minimax LP directly and reads the column
  strategy off the dual multipliers.
* ``sampled_security_level`` computes only the row side through a different
  formulation (shift the matrix positive, then maximize the mass of an
  unnormalized strategy under unit column constraints).

Having two formulations lets tests cross-check one against the other.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from .errors import InvalidArgument, NumericalFailure


@dataclass(frozen=True)
class GameSolution:
    """Game value plus optimal mixed strategies for both players."""

    value: float
    row_strategy: np.ndarray
    col_strategy: np.ndarray


def _validated(matrix) -> np.ndarray:
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.size == 0:
        raise InvalidArgument("matrix must be 2-D and nonempty")
    if not np.all(np.isfinite(a)):
        raise InvalidArgument("matrix entries must be finite")
    return a


def _cleaned(weights: np.ndarray) -> np.ndarray:
    w = np.clip(weights, 0.0, None)
    total = w.sum()
    if total <= 0.0:
        raise NumericalFailure("strategy weights sum to zero")
    return w / total


def solve_zero_sum(matrix) -> GameSolution:
    """Solve min_y max_z y'Az: value and both optimal mixed strategies.

    LP over (y, v): minimize v subject to A'y <= v, sum(y) = 1, y >= 0.
    The maximizer's strategy is recovered from the dual multipliers of the
    column constraints.
    """
    a = _validated(matrix)
    m, n = a.shape
    c = np.zeros(m + 1)
    c[m] = 1.0
    a_ub = np.hstack([a.T, -np.ones((n, 1))])
    a_eq = np.ones((1, m + 1))
    a_eq[0, m] = 0.0
    bounds = [(0.0, None)] * m + [(None, None)]
    res = linprog(c, A_ub=a_ub, b_ub=np.zeros(n), A_eq=a_eq, b_eq=np.ones(1),
                  bounds=bounds, method="highs")
    if not res.success:
        raise NumericalFailure(f"minimax LP failed (status {res.status}): {res.message}")
    row = _cleaned(res.x[:m])
    col = _cleaned(-np.asarray(res.ineqlin.marginals))
    return GameSolution(float(res.fun), row, col)


def sampled_security_level(matrix) -> tuple[float, np.ndarray]:
    """Row player's security level against a fixed set of columns.

    Returns ``(value, y)`` with ``value = min_y max_j (A'y)_j`` and ``y`` an
    attaining mixed strategy.  Solved by shifting the matrix positive and
    maximizing total mass u >= 0 under ``A_shifted' u <= 1``; then
    ``value = 1 / sum(u) - shift`` and ``y = u / sum(u)``.
    """
    a = _validated(matrix)
    shift = 1.0 - float(a.min())
    shifted = a + shift
    m, n = a.shape
    res = linprog(-np.ones(m), A_ub=shifted.T, b_ub=np.ones(n),
                  bounds=[(0.0, None)] * m, method="highs")
    if not res.success:
        raise NumericalFailure(f"security LP failed (status {res.status}): {res.message}")
    total = res.x.sum()
    if total <= 0.0:
        raise NumericalFailure("security LP returned an empty strategy")
    return 1.0 / total - shift, _cleaned(res.x)


def best_pure_response(matrix, row_strategy) -> tuple[int, float]:
    """Maximizing column against a fixed row mixture: (index, payoff).

    Ties resolve to the lowest column index.
    """
    a = _validated(matrix)
    y = np.asarray(row_strategy, dtype=float)
    if y.shape != (a.shape[0],):
        raise InvalidArgument("row strategy length must match the matrix rows")
    payoffs = y @ a
    j = int(np.argmax(payoffs))
    return j, float(payoffs[j])
