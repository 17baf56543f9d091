"""Exact integer approximant pairs and certified remainder intervals.

For each order n the construction produces integers A and B such that

    remainder(n) = B * T(z) - A

is small, where T is the Tschakaloff-type series of the instance.  Both
integers come out of exact rational arithmetic followed by an
integrality assertion, so the divisibility theory behind the clearing
factor is re-verified on every call.

Each :class:`ApproximantRecord` is additionally cross-checked against a
second, independent route: the clearing factor times a direct summation
of the order-n remainder series.  The two enclosures must overlap; a
failure aborts with :class:`InvariantViolationError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import ProblemInstance, RationalInterval, golden_shift, parse_rational
from .errors import InvariantViolationError, WitnessNotFoundError
from .qpoly import pochhammer_coefficient_values
from .series import SeriesTermBudget, remainder_series_enclosure, tschakaloff_enclosure

__all__ = [
    "ApproximantRecord",
    "normalizer",
    "approximant_pair",
    "approximant_numerator",
    "approximant_denominator",
    "compute_record",
    "find_witness",
]

# Refinement schedule when a remainder interval still straddles zero:
# shrink the target width by 2**-16 per round, a handful of rounds deep.
_REFINE_SHIFT = 16
_MAX_REFINEMENTS = 12


@dataclass(frozen=True)
class ApproximantRecord:
    """One row of the approximant table.

    ``remainder`` always contains B * T(z) - A by construction, and
    ``nonzero_certified`` is set only when that interval excludes zero.
    """

    n: int
    m: int
    A: int
    B: int
    remainder: RationalInterval
    nonzero_certified: bool

    def to_json_dict(self) -> dict:
        """Wire form with lossless string-encoded integers and endpoints."""
        return {
            "n": self.n,
            "m": self.m,
            "A": str(self.A),
            "B": str(self.B),
            "I_lo": str(self.remainder.lo),
            "I_hi": str(self.remainder.hi),
            "nonzero": self.nonzero_certified,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ApproximantRecord":
        return cls(
            n=int(data["n"]),
            m=int(data["m"]),
            A=int(data["A"]),
            B=int(data["B"]),
            remainder=RationalInterval(
                parse_rational(data["I_lo"]), parse_rational(data["I_hi"])
            ),
            nonzero_certified=bool(data["nonzero"]),
        )


def normalizer(inst: ProblemInstance, n: int) -> Fraction:
    """The monomial z1^n z2^m q1^(m(m-1)/2) q2^(n(n+1)/2 + n(n-1)/2 + nm).

    Multiplying the order-n remainder series by this factor clears every
    denominator, which is what makes A and B integers.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    m = golden_shift(n)
    return Fraction(
        inst.z1**n
        * inst.z2**m
        * inst.q1 ** (m * (m - 1) // 2)
        * inst.q2 ** (n * (n + 1) // 2 + n * (n - 1) // 2 + n * m)
    )


@lru_cache(maxsize=4096)
def _pair(inst: ProblemInstance, n: int) -> tuple[int, int]:
    q, z = inst.q, inst.z
    m = golden_shift(n)
    values = pochhammer_coefficient_values(n, q)

    # prefix[j] = sum_{l=0..j} z^l q^(-l(l-1)/2), the truncated series head
    prefix = []
    head = Fraction(0)
    term = Fraction(1)
    qpow = Fraction(1)
    for _ in range(n + m + 1):
        head += term
        prefix.append(head)
        term = term * z / qpow
        qpow *= q

    # B-sum: sum_k c_k(q) z^(-k) q^(k(k-1)/2 + km)
    # A-sum: the same weights, each multiplied by the series head prefix[k+m]
    z_inv = 1 / z
    zp = Fraction(1)  # z^(-k)
    qp = Fraction(1)  # q^(k(k-1)/2 + km)
    step = q**m  # exponent grows by k + m per index
    b_total = Fraction(0)
    a_total = Fraction(0)
    for k in range(n + 1):
        base = values[k] * zp * qp
        b_total += base
        a_total += base * prefix[k + m]
        zp *= z_inv
        qp *= step
        step *= q

    scale = normalizer(inst, n)
    a_exact = scale * a_total
    b_exact = scale * b_total
    if a_exact.denominator != 1 or b_exact.denominator != 1:
        raise InvariantViolationError(
            f"approximants for n={n} failed integrality: "
            f"A={a_exact}, B={b_exact}"
        )
    return a_exact.numerator, b_exact.numerator


def approximant_pair(inst: ProblemInstance, n: int) -> tuple[int, int]:
    """(A, B) for order n, computed exactly and asserted integral."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return _pair(inst, n)


def approximant_numerator(inst: ProblemInstance, n: int) -> int:
    """The integer A with remainder(n) = B * T(z) - A."""
    return approximant_pair(inst, n)[0]


def approximant_denominator(inst: ProblemInstance, n: int) -> int:
    """The integer coefficient B multiplying T(z) in the cleared linear form."""
    return approximant_pair(inst, n)[1]


def _leading_magnitude(inst: ProblemInstance, n: int, m: int) -> Fraction:
    """Magnitude of the first surviving remainder-series term, times the clearing factor.

    This is the natural scale of remainder(n); certification starts from a
    quarter of it so the very first enclosure usually resolves the sign.
    """
    q, z = inst.q, inst.z
    exponent = (n + m) * (n + m + 1) // 2
    return (
        abs(normalizer(inst, n))
        * abs(z) ** (n + m + 1)
        / abs(q) ** exponent
    )


def compute_record(
    inst: ProblemInstance, n: int, budget: SeriesTermBudget | None = None
) -> ApproximantRecord:
    """Build the full certified record for order n.

    The remainder enclosure is driven below ``budget.target_width`` (or
    below a quarter of its natural magnitude, whichever is smaller) and
    refined further while it still straddles zero.  The direct-series
    route is always computed alongside and must overlap.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    budget = budget or SeriesTermBudget()
    a_value, b_value = approximant_pair(inst, n)
    m = golden_shift(n)
    scale = normalizer(inst, n)
    q, z = inst.q, inst.z

    width = min(budget.target_width, _leading_magnitude(inst, n, m) / 4)
    remainder = None
    certified = False
    for _ in range(_MAX_REFINEMENTS):
        series_width = width / max(1, abs(b_value))
        t_enclosure = tschakaloff_enclosure(
            q, z, SeriesTermBudget(budget.max_terms, series_width)
        )
        remainder = t_enclosure * b_value - a_value

        direct = remainder_series_enclosure(
            inst, n, SeriesTermBudget(budget.max_terms, width / abs(scale))
        )
        scaled_direct = direct * scale
        if not remainder.overlaps(scaled_direct):
            raise InvariantViolationError(
                f"remainder routes disagree at n={n}: "
                f"linear form {remainder} vs direct series {scaled_direct}"
            )

        if not remainder.contains_zero():
            certified = True
            break
        width /= 1 << _REFINE_SHIFT

    return ApproximantRecord(
        n=n,
        m=m,
        A=a_value,
        B=b_value,
        remainder=remainder,
        nonzero_certified=certified,
    )


def find_witness(
    inst: ProblemInstance,
    b: int,
    n_max: int,
    max_terms: int = 100_000,
) -> tuple[int, ApproximantRecord]:
    """Smallest n <= n_max whose record certifies 0 < |b * remainder(n)| < 1.

    Such a record refutes T(z) = a/b for every integer a.  The series
    width per n follows min(2^-64, 1/(4 |B| b)) so the scaled interval
    can resolve both the zero exclusion and the comparison against 1.
    Raises :class:`WitnessNotFoundError` when no n qualifies.
    """
    if b < 1:
        raise ValueError(f"b must be a positive integer, got {b}")
    if n_max < 1:
        raise ValueError(f"n_max must be a positive integer, got {n_max}")
    for n in range(1, n_max + 1):
        _, b_value = approximant_pair(inst, n)
        series_width = min(
            Fraction(1, 2**64), Fraction(1, 4 * b * max(1, abs(b_value)))
        )
        target = series_width * max(1, abs(b_value))
        record = compute_record(inst, n, SeriesTermBudget(max_terms, target))
        if not record.nonzero_certified:
            continue
        _, largest = record.remainder.abs_bounds()
        if b * largest < 1:
            return n, record
    raise WitnessNotFoundError(
        f"no certified witness with 0 < |b * remainder| < 1 for b={b} "
        f"within n <= {n_max}",
        n_max=n_max,
    )
