"""Exception types shared across the package."""

from __future__ import annotations


class PrecisionExhaustedError(Exception):
    """A series evaluation ran out of terms before reaching the target width.

    The partial result is still a valid (wide) enclosure and is carried in
    ``achieved`` so callers can decide whether it is good enough.
    """

    def __init__(self, message: str, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class WitnessNotFoundError(Exception):
    """No index up to ``n_max`` produced a certified witness."""

    def __init__(self, message: str, n_max: int):
        super().__init__(message)
        self.n_max = n_max


class InvariantViolationError(Exception):
    """An internal mathematical invariant failed; indicates a bug, not bad input."""


class EstimationError(Exception):
    """The record data is unsuitable for fitting an irrationality exponent."""
