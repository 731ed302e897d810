"""Exception types shared across the package."""
from __future__ import annotations


class HideSeekError(Exception):
    """Base class for all package-specific failures."""


class InvalidArgument(HideSeekError, ValueError):
    """A caller-supplied value violates a documented precondition."""


class DegenerateRegion(HideSeekError):
    """An operation needs a region of positive area but got a flat one."""


class DegenerateMeasurement(HideSeekError):
    """A point sits on (or numerically too close to) a sensor line."""


class GenerationFailed(HideSeekError):
    """Random scenario generation could not satisfy its constraints."""


class InvalidTreasure(HideSeekError, ValueError):
    """A treasure index is outside the candidate range of the scenario."""


class TooManyPoints(HideSeekError):
    """An exact path computation was asked for more points than it supports."""


class Exhausted(HideSeekError):
    """A policy was queried in a state with no unvisited location left."""


class NumericalFailure(HideSeekError):
    """An underlying numerical routine (LP solve) did not converge."""
