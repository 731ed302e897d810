"""Open tours from a start point through a set of targets.

Two planners share one interface: an exact dynamic program for small target
sets, and a strip sweep for large ones whose length is bounded by
``2*sqrt(area(container) * n) + (9/sqrt(2)) * sqrt(ambient_area)``.
``best_path`` picks the exact planner up to 15 points and the sweep above.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ._util import iceil
from .errors import DegenerateRegion, TooManyPoints
from .geometry import ConvexRegion, Point, area, dist, min_enclosing_rectangle

MAX_EXACT_POINTS = 15


@dataclass(frozen=True)
class Path:
    """Visiting order (indices into the input points) and total length."""

    order: tuple[int, ...]
    length: float


def exact_open_path(start: Point, points: Sequence[Point]) -> Path:
    """Shortest open path from ``start`` through all points (end anywhere).

    Held-Karp dynamic program over subsets: O(2^n * n^2) time, O(2^n * n)
    memory.  Refuses more than 15 points.  Ties resolve deterministically
    (numpy argmin takes the lowest index).
    """
    n = len(points)
    if n > MAX_EXACT_POINTS:
        raise TooManyPoints(f"exact path limited to {MAX_EXACT_POINTS} points, got {n}")
    if n == 0:
        return Path((), 0.0)

    pts = np.asarray(points, dtype=float)
    pair = np.hypot(pts[:, None, 0] - pts[None, :, 0], pts[:, None, 1] - pts[None, :, 1])
    from_start = np.hypot(pts[:, 0] - start[0], pts[:, 1] - start[1])

    size = 1 << n
    best = np.full((size, n), np.inf)
    parent = np.full((size, n), -1, dtype=np.int8)
    for i in range(n):
        best[1 << i, i] = from_start[i]

    for mask in range(1, size):
        ext = best[mask][:, None] + pair    # ext[i, j]: end at i, then hop to j
        vals = ext.min(axis=0)
        args = ext.argmin(axis=0)
        for j in range(n):
            if mask >> j & 1:
                continue
            nxt = mask | (1 << j)
            if vals[j] < best[nxt, j]:
                best[nxt, j] = vals[j]
                parent[nxt, j] = args[j]

    full = size - 1
    last = int(np.argmin(best[full]))
    length = float(best[full, last])
    order = []
    mask, cur = full, last
    while cur >= 0:
        order.append(cur)
        prev = int(parent[mask, cur])
        mask ^= 1 << cur
        cur = prev
    order.reverse()
    return Path(tuple(order), length)


def strip_path(start: Point, points: Sequence[Point], container: ConvexRegion,
               ambient_area: float) -> Path:
    """Boustrophedon sweep through points lying inside a convex container.

    The container's minimum enclosing rectangle is split into
    ``ceil(sqrt(n * area(container)) / short_side)`` strips across its long
    side; strips are traversed in order, alternating sweep direction, points
    within a strip ordered by the sweep coordinate.  The resulting length is
    at most ``2*sqrt(area(container)*n) + (9/sqrt(2))*sqrt(ambient_area)``
    whenever ``start`` lies in a region of area ``ambient_area`` containing
    the container.
    """
    n = len(points)
    if n == 0:
        return Path((), 0.0)
    if n == 1:
        return Path((0,), dist(start, points[0]))
    region_area = area(container)
    if region_area <= 0.0:
        raise DegenerateRegion("strip sweep needs a container of positive area")

    rect = min_enclosing_rectangle(container)
    ux, uy = rect.axis
    wx, wy = -uy, ux
    cx, cy = rect.center
    long_side = 2.0 * rect.halfwidth
    short_side = 2.0 * rect.halfheight

    # Strip count balances cross-strip travel (grows with strips) against
    # within-strip transverse wiggle (shrinks with strips).
    strips = max(1, iceil(math.sqrt(n * region_area) / short_side))
    strip_w = long_side / strips

    groups: list[list[tuple[float, int]]] = [[] for _ in range(strips)]
    for idx, (x, y) in enumerate(points):
        dx, dy = x - cx, y - cy
        lu = ux * dx + uy * dy
        lw = wx * dx + wy * dy
        si = int((lu + rect.halfwidth) / strip_w) if strip_w > 0 else 0
        si = min(max(si, 0), strips - 1)
        groups[si].append((lw, idx))

    order: list[int] = []
    forward = True
    for group in groups:
        if not group:
            continue
        if forward:
            group.sort(key=lambda t: (t[0], t[1]))
        else:
            group.sort(key=lambda t: (-t[0], t[1]))
        order.extend(idx for _, idx in group)
        forward = not forward

    length = 0.0
    pos = start
    for idx in order:
        length += dist(pos, points[idx])
        pos = points[idx]
    return Path(tuple(order), length)


def best_path(start: Point, points: Sequence[Point], container: ConvexRegion,
              ambient_area: float) -> Path:
    """Exact path for up to 15 points, strip sweep beyond that."""
    if len(points) <= MAX_EXACT_POINTS:
        return exact_open_path(start, points)
    return strip_path(start, points, container, ambient_area)
