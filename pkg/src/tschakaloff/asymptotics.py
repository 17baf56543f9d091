"""Exponent laws, hypothesis checking, and irrationality-measure estimation.

Write L(n) for log|B_n| / (n^2 log|q1|) and R(n) for the same ratio with
the remainder magnitude in place of |B_n|.  As n grows these converge to
closed-form constants built from sqrt(5) and the log ratio
g = log|q2|/log|q1|:

    L(n)  ->  (5 + sqrt(5)) / 4                       (independent of g)
    R(n)  ->  -(1-g)(1+b)^2/2 + g(1+b) + b^2/2        with b = (sqrt(5)-1)/2
           =  -sqrt(5)(sqrt(5)+1)(g0 - g) / (2(sqrt(5)-1)),

where g0 = (3 - sqrt(5))/2.  The decay exponent is negative exactly when
g < g0, which is the applicability hypothesis of the whole method; when
it holds, the expected irrationality exponent is 1 + (sqrt(5)-1)/(2(g0-g)).

Empirical counterparts are computed from record sequences using interval
midpoints: they are diagnostics, not proofs (certification lives in the
approximants module).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import pairwise

from .approximants import ApproximantRecord
from .arith import (
    ProblemInstance,
    RationalInterval,
    ln_enclosure,
    log_ratio_enclosure,
    sqrt_enclosure,
)
from .errors import EstimationError, InvariantViolationError

__all__ = [
    "ExponentReport",
    "MeasureEstimate",
    "HypothesisResult",
    "denominator_growth_exponent",
    "remainder_decay_exponent",
    "empirical_exponents",
    "hypothesis_check",
    "irrationality_exponent_bound",
    "estimate_measure",
]

logger = logging.getLogger(__name__)

_DEFAULT_WIDTH = Fraction(1, 2**64)
_LOG_WIDTH = Fraction(1, 2**32)

# Midpoint logarithms carry denominators far beyond their 2**-32 accuracy;
# reported ratios are snapped to the nearest fraction with a 64-bit
# denominator, which perturbs them by less than 2**-64.
_REPORT_DENOMINATOR = 2**64


def _snap(x: Fraction) -> Fraction:
    return x.limit_denominator(_REPORT_DENOMINATOR)


@dataclass(frozen=True)
class ExponentReport:
    """Empirical vs theoretical exponents at one order n."""

    n: int
    empirical_B: Fraction
    empirical_I: Fraction
    theoretical_B: RationalInterval
    theoretical_I: RationalInterval


@dataclass(frozen=True)
class MeasureEstimate:
    """Fitted power-law exponent c and the resulting irrationality exponents."""

    c_hat: Fraction
    predicted_exponent: RationalInterval
    empirical_exponent: Fraction


@dataclass(frozen=True)
class HypothesisResult:
    """Outcome of the g < g0 check, with the separating enclosures."""

    satisfied: bool
    gamma: RationalInterval
    gamma0: RationalInterval


def _sqrt5(max_width: Fraction) -> RationalInterval:
    return sqrt_enclosure(Fraction(5), max_width)


def gamma0_enclosure(max_width: Fraction = _DEFAULT_WIDTH) -> RationalInterval:
    """Enclosure of the threshold (3 - sqrt(5)) / 2 = 0.381966..."""
    return (3 - _sqrt5(Fraction(max_width))) / 2


def denominator_growth_exponent(max_width: Fraction = _DEFAULT_WIDTH) -> RationalInterval:
    """Enclosure of (5 + sqrt(5)) / 4 = 1.809016..., the limit of L(n).

    The log ratio g cancels out of this limit entirely, so the value is
    the same for every admissible instance.
    """
    return (_sqrt5(Fraction(max_width) * 2) + 5) / 4


def remainder_decay_exponent(
    gamma: RationalInterval, max_width: Fraction = _DEFAULT_WIDTH
) -> RationalInterval:
    """Enclosure of the limit of R(n) for a log ratio inside ``gamma``.

    Both closed forms (the expanded golden-ratio combination and the
    factored multiple of g0 - g) are evaluated; they must overlap, and
    their intersection is returned.  Strictly negative whenever gamma is
    separated below g0.
    """
    if gamma.lo < 0 or gamma.hi >= 1:
        raise ValueError(f"gamma must lie within [0, 1), got {gamma}")
    root = _sqrt5(Fraction(max_width) / 16)
    beta = (root - 1) / 2
    phi = beta + 1
    expanded = -(1 - gamma) * phi * phi / 2 + gamma * phi + beta * beta / 2
    gamma0 = (3 - root) / 2
    factored = -(root * (root + 1) * (gamma0 - gamma)) / (2 * (root - 1))
    if not expanded.overlaps(factored):
        raise InvariantViolationError(
            f"decay-exponent forms disagree: {expanded} vs {factored}"
        )
    return expanded.intersect(factored)


def irrationality_exponent_bound(
    gamma: RationalInterval, max_width: Fraction = _DEFAULT_WIDTH
) -> RationalInterval:
    """Enclosure of 1 + (sqrt(5) - 1) / (2 (g0 - gamma)).

    Requires gamma to be entirely below g0; the value blows up as gamma
    approaches the threshold.
    """
    root = _sqrt5(Fraction(max_width) / 16)
    gamma0 = (3 - root) / 2
    difference = gamma0 - gamma
    if difference.lo <= 0:
        raise ValueError(
            f"gamma {gamma} is not separated below the threshold {gamma0}"
        )
    return 1 + (root - 1) / (2 * difference)


def hypothesis_check(
    inst: ProblemInstance, initial_width: Fraction = Fraction(1, 2**16)
) -> HypothesisResult:
    """Decide g < g0 with certified enclosure separation.

    Both enclosures are refined until they are disjoint.  Equality g = g0
    cannot occur (g0 is irrational while g is a ratio of logarithms of
    integers that the threshold's algebraic relations rule out), so the
    refinement terminates.
    """
    width = Fraction(initial_width)
    for _ in range(64):
        gamma = log_ratio_enclosure(inst, width)
        gamma0 = gamma0_enclosure(width)
        if gamma.hi < gamma0.lo:
            return HypothesisResult(True, gamma, gamma0)
        if gamma.lo > gamma0.hi:
            return HypothesisResult(False, gamma, gamma0)
        width /= 1 << 8
    raise RuntimeError(
        f"could not separate the log ratio from the threshold for {inst}"
    )


def empirical_exponents(
    records: list[ApproximantRecord],
    inst: ProblemInstance,
    log_width: Fraction = _LOG_WIDTH,
) -> list[ExponentReport]:
    """Per-record exponent ratios from enclosure midpoints.

    Records with B = 0 or without a nonzero certificate carry no usable
    logarithm and are skipped with a logged notice.
    """
    if abs(inst.q1) <= 1:
        raise ValueError(f"|q1| must exceed 1, got {inst.q1}")
    ln_q1 = ln_enclosure(Fraction(abs(inst.q1)), log_width).midpoint
    gamma = log_ratio_enclosure(inst, log_width)
    theoretical_b = denominator_growth_exponent()
    theoretical_i = remainder_decay_exponent(gamma)
    reports = []
    for record in records:
        if record.B == 0 or not record.nonzero_certified:
            logger.warning(
                "skipping n=%d: B=%d, nonzero_certified=%s",
                record.n,
                record.B,
                record.nonzero_certified,
            )
            continue
        scale = record.n**2 * ln_q1
        emp_b = ln_enclosure(Fraction(abs(record.B)), log_width).midpoint / scale
        magnitude = abs(record.remainder.midpoint)
        emp_i = ln_enclosure(magnitude, log_width).midpoint / scale
        reports.append(
            ExponentReport(
                n=record.n,
                empirical_B=_snap(emp_b),
                empirical_I=_snap(emp_i),
                theoretical_B=theoretical_b,
                theoretical_I=theoretical_i,
            )
        )
    return reports


def estimate_measure(
    records: list[ApproximantRecord],
    inst: ProblemInstance,
    log_width: Fraction = _LOG_WIDTH,
) -> MeasureEstimate:
    """Fit the power law |remainder/B| ~ |B|^(-1-c) and report 1 + 1/c.

    A least-squares line of -log|remainder/B| against log|B| is fitted
    over the last half of the certified records (the early orders carry
    an O(1/n) bias).  The consecutive-log-ratio side condition of the
    approximation lemma is checked before fitting.
    """
    usable = [r for r in records if r.nonzero_certified and r.B != 0]
    if len(usable) < 5:
        raise EstimationError(
            f"need at least 5 certified records, got {len(usable)}"
        )
    magnitudes = [abs(r.B) for r in usable]
    if any(b >= c for b, c in pairwise(magnitudes)):
        raise EstimationError("|B| must be strictly increasing across records")

    window = usable[len(usable) // 2 :]
    xs = [ln_enclosure(Fraction(abs(r.B)), log_width).midpoint for r in window]
    ys = [
        x - ln_enclosure(abs(r.remainder.midpoint), log_width).midpoint
        for x, r in zip(xs, window)
    ]

    for left, right in pairwise(xs):
        if left == 0:
            raise EstimationError("log|B| vanishes inside the fitting window")
        ratio = right / left
        if abs(ratio - 1) > Fraction(1, 2):
            raise EstimationError(
                f"consecutive log-denominator ratio {ratio} is too far from 1"
            )

    count = len(window)
    sum_x = sum(xs)
    sum_y = sum(ys)
    sum_xx = sum(x * x for x in xs)
    sum_xy = sum(x * y for x, y in zip(xs, ys))
    denominator = count * sum_xx - sum_x * sum_x
    if denominator == 0:
        raise EstimationError("degenerate abscissas; cannot fit a slope")
    slope = (count * sum_xy - sum_x * sum_y) / denominator

    c_hat = _snap(slope - 1)
    if c_hat <= 0:
        raise EstimationError(
            f"fitted exponent c={c_hat} is not positive; no decay to exploit"
        )
    gamma = log_ratio_enclosure(inst, log_width)
    return MeasureEstimate(
        c_hat=c_hat,
        predicted_exponent=irrationality_exponent_bound(gamma),
        empirical_exponent=_snap(1 + 1 / c_hat),
    )
