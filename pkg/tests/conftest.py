"""Shared test helpers."""
from __future__ import annotations

import math

import numpy as np

from hideseek.geometry import ConvexRegion, Point


def convex_hull(points: list[Point]) -> list[Point]:
    """Andrew's monotone chain; returns counterclockwise hull vertices."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def random_convex_region(rng: np.random.Generator, max_points: int = 12,
                         scale: float = 1.0, offset: Point = (0.0, 0.0)) -> ConvexRegion:
    """Convex hull of a handful of uniform points; retries until nondegenerate."""
    while True:
        count = int(rng.integers(3, max_points + 1))
        pts = rng.uniform(0.0, scale, size=(count, 2)) + np.asarray(offset)
        hull = convex_hull([(float(x), float(y)) for x, y in pts])
        if len(hull) >= 3:
            region = ConvexRegion(tuple(hull))
            from hideseek.geometry import area
            if area(region) > 1e-6 * scale * scale:
                return region


def random_unit_normal(rng: np.random.Generator) -> Point:
    theta = float(rng.uniform(0.0, 2.0 * math.pi))
    return (math.cos(theta), math.sin(theta))
