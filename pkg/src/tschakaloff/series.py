"""Certified enclosures for the series values.

Three series are evaluated, all with exact rational partial sums and
explicit geometric tail bounds, so every return value is a rigorous
enclosure:

* ``tschakaloff_enclosure``: T(z) = sum_j z^j q^(-j(j-1)/2) for |q| > 1;
* ``theta_enclosure``: sum_j z^j q^(-j^2), evaluated through the identity
  with T at parameters (q^2, z/q);
* ``remainder_series_enclosure``: the shifted remainder series attached to
  order n, whose terms vanish identically until index n + 1.

The tail of each series is bounded once the term ratio drops below 1/2,
after which the remaining mass is at most twice the next term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import ProblemInstance, RationalInterval, golden_shift
from .errors import PrecisionExhaustedError

__all__ = [
    "SeriesTermBudget",
    "tschakaloff_enclosure",
    "theta_enclosure",
    "remainder_series_enclosure",
]


@dataclass(frozen=True)
class SeriesTermBudget:
    """Caps a summation: at most ``max_terms`` terms, aiming at ``target_width``."""

    max_terms: int = 100_000
    target_width: Fraction = Fraction(1, 2**64)

    def __post_init__(self):
        object.__setattr__(self, "target_width", Fraction(self.target_width))
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be at least 1, got {self.max_terms}")
        if self.target_width <= 0:
            raise ValueError(f"target_width must be positive, got {self.target_width}")


def tschakaloff_enclosure(
    q: Fraction, z: Fraction, budget: SeriesTermBudget | None = None
) -> RationalInterval:
    """Enclosure of sum_{j>=0} z^j q^(-j(j-1)/2) of width <= budget.target_width.

    The partial sum is exact; after the ratio of consecutive terms
    |z|/|q|^j falls to 1/2 or below, the dropped tail is bounded by twice
    the first omitted term.  Raises :class:`PrecisionExhaustedError`
    (carrying the best rigorous enclosure reached, if any) when
    ``max_terms`` is hit first.
    """
    q, z = Fraction(q), Fraction(z)
    if abs(q) <= 1:
        raise ValueError(f"|q| must exceed 1, got {q}")
    budget = budget or SeriesTermBudget()
    abs_z = abs(z)
    partial = Fraction(0)
    term = Fraction(1)  # z^j q^(-j(j-1)/2), starting at j = 0
    qpow = Fraction(1)  # q^j
    achieved = None
    for _ in range(budget.max_terms):
        partial += term
        term = term * z / qpow
        qpow *= q
        # term is now the first omitted one; for every later index the
        # term ratio is at most |z| / |qpow|
        if 2 * abs_z <= abs(qpow):
            tail = 2 * abs(term)
            achieved = RationalInterval(partial - tail, partial + tail)
            if 2 * tail <= budget.target_width:
                return achieved
    raise PrecisionExhaustedError(
        f"{budget.max_terms} terms did not reach width {budget.target_width}",
        achieved=achieved,
    )


def theta_enclosure(
    q: Fraction, z: Fraction, budget: SeriesTermBudget | None = None
) -> RationalInterval:
    """Enclosure of sum_{j>=0} z^j q^(-j^2), for |q| > 1.

    Delegates to :func:`tschakaloff_enclosure` at parameters (q^2, z/q),
    which sums the identical series term by term.
    """
    q, z = Fraction(q), Fraction(z)
    if abs(q) <= 1:
        raise ValueError(f"|q| must exceed 1, got {q}")
    return tschakaloff_enclosure(q * q, z / q, budget)


def remainder_series_enclosure(
    inst: ProblemInstance, n: int, budget: SeriesTermBudget | None = None
) -> RationalInterval:
    """Enclosure of the order-n remainder series

        sum_{t>=1} P_n(q^(-t)) * z^(t+m) * q^(-(t+m)(t+m-1)/2),

    where P_n(x) = (1 - q*x)(1 - q^2*x)...(1 - q^n*x) and m is the golden
    shift of n.  The summand vanishes identically for t = 1..n (the
    factor 1 - q^t q^(-t) is zero), so summation starts at t = n + 1.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    budget = budget or SeriesTermBudget()
    q, z = inst.q, inst.z
    m = golden_shift(n)
    abs_q, abs_z = abs(q), abs(z)
    # Crude bound on |P_n(q^(-t))| for t > n: each factor has magnitude
    # below 2, so 2^n works.  The product prod_j (1 + |q|^(j-t)) is
    # sharper but not needed at these sizes.
    poly_bound = 1 << n

    q_powers = [q**j for j in range(1, n + 1)]
    q_inv = 1 / q
    q_inv_m = q_inv**m
    qt = q_inv ** (n + 1)  # q^(-t)
    t = n + 1
    zpow = z ** (t + m)  # z^(t+m)
    exps = (t + m) * (t + m - 1) // 2
    qexp = q_inv**exps  # q^(-(t+m)(t+m-1)/2)
    abs_q_pow = abs_q ** (t + m)  # |q|^(t+m), drives the ratio bound

    partial = Fraction(0)
    achieved = None
    for _ in range(budget.max_terms):
        poly = Fraction(1)
        for p in q_powers:
            poly *= 1 - p * qt
        partial += poly * zpow * qexp
        # next index t+1: first omitted magnitude and the ratio guard
        zpow_next = zpow * z
        qexp_next = qexp * qt * q_inv_m  # exponent grows by t + m
        if 2 * abs_z <= abs_q_pow * abs_q:
            first_omitted = abs_z * abs(zpow) * abs(qexp_next)
            tail = 2 * poly_bound * first_omitted
            achieved = RationalInterval(partial - tail, partial + tail)
            if 2 * tail <= budget.target_width:
                return achieved
        t += 1
        zpow = zpow_next
        qexp = qexp_next
        qt *= q_inv
        abs_q_pow *= abs_q
    raise PrecisionExhaustedError(
        f"{budget.max_terms} terms did not reach width {budget.target_width}",
        achieved=achieved,
    )
