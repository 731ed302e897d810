"""Small numeric helpers used throughout the package."""
from __future__ import annotations

import math

# Tolerance used when deciding that a float is "really" an integer before
# taking a ceiling.  Expressions like 11 / 0.02 evaluate to 549.9999...,
# and a naive ceil would silently inflate sample counts.
_INT_SNAP = 1e-9


def iceil(x: float) -> int:
    """Ceiling that snaps values within 1e-9 of an integer to that integer."""
    nearest = round(x)
    if abs(x - nearest) < _INT_SNAP:
        return int(nearest)
    return int(math.ceil(x))


def fmt(x: float) -> str:
    """Format a float with 17 significant digits (round-trips float64)."""
    return format(float(x), ".17g")
