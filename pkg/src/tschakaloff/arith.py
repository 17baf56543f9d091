"""Exact scalar arithmetic: rationals, rational-endpoint intervals, and enclosures.

Everything downstream (series evaluation, approximant construction,
exponent reports) works with three kinds of scalars:

* ``int`` for arbitrary-precision integers,
* ``fractions.Fraction`` for exact rationals (always canonical:
  positive denominator, reduced),
* :class:`RationalInterval` for real quantities that are not rational
  (square roots, logarithms, values of infinite series).  An interval is
  a *proof-grade* enclosure: every operation returns an interval that is
  guaranteed to contain the exact real result.

No floating point is used anywhere in this module.
"""

from __future__ import annotations

import re
import sys
import threading
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import isqrt

# Exact serialization of approximants routinely exceeds the interpreter's
# default 4300-digit guard on int/str conversion; raise it (never lower).
if hasattr(sys, "set_int_max_str_digits"):
    if 0 < sys.get_int_max_str_digits() < 2_000_000:
        sys.set_int_max_str_digits(2_000_000)

__all__ = [
    "Fraction",
    "isqrt",
    "golden_shift",
    "RationalInterval",
    "sqrt_enclosure",
    "ln_enclosure",
    "log_ratio_enclosure",
    "ProblemInstance",
    "parse_rational",
    "format_rational",
    "decimal_str",
]


_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse the canonical ``[-]num`` / ``[-]num/den`` text form.

    Stricter than ``Fraction(str)``: no whitespace, no decimal points,
    no exponents, denominator must be a positive integer.
    """
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(x: Fraction) -> str:
    """Canonical text form: ``num/den``, or just ``num`` when den == 1."""
    return str(Fraction(x))


def decimal_str(x: Fraction, digits: int = 20) -> str:
    """Decimal approximation of a rational with ``digits`` significant digits.

    Purely for human-facing output; rounding is done exactly by the
    ``decimal`` module (half-even), so the result is deterministic.
    """
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = digits
        value = Decimal(x.numerator) / Decimal(x.denominator)
    return str(value)


def golden_shift(n: int) -> int:
    """Return ``floor(n * (sqrt(5) - 1) / 2)`` computed in pure integer arithmetic.

    This is the shift index pairing each approximant order ``n`` with
    ``m = floor(beta * n)`` where ``beta`` is the positive root of
    ``x**2 + x - 1``.  Floating point is never consulted: ``beta * n``
    can sit arbitrarily close to an integer, so the floor is taken as
    ``(isqrt(5 n^2) - n) // 2``, which is exact for every ``n``.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return (isqrt(5 * n * n) - n) // 2


def _ceil_log2(v: Fraction) -> int:
    """Smallest s >= 0 with 2**s >= v, for positive rational v."""
    num, den = v.numerator, v.denominator
    if num <= den:
        return 0
    s = (num // den).bit_length() - 1
    while (den << s) < num:
        s += 1
    return s


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval with exact rational endpoints, ``lo <= hi``.

    Ring operations are outward-conservative by construction: because the
    endpoints are exact rationals there is no rounding, so the image of
    any contained reals under +, -, * is contained in the result.
    Division requires the divisor interval to exclude zero.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"inverted interval: [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "RationalInterval":
        """Degenerate interval [x, x]."""
        x = Fraction(x)
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        x = Fraction(x)
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def contains_interval(self, other: "RationalInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def overlaps(self, other: "RationalInterval") -> bool:
        return max(self.lo, other.lo) <= min(self.hi, other.hi)

    def intersect(self, other: "RationalInterval") -> "RationalInterval":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise ValueError(f"disjoint intervals: {self} and {other}")
        return RationalInterval(lo, hi)

    def abs_bounds(self) -> tuple[Fraction, Fraction]:
        """(min, max) of |x| over the interval."""
        if self.contains_zero():
            low = Fraction(0)
        else:
            low = min(abs(self.lo), abs(self.hi))
        return low, max(abs(self.lo), abs(self.hi))

    @staticmethod
    def _coerce(other) -> "RationalInterval | None":
        if isinstance(other, RationalInterval):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalInterval.point(other)
        return None

    def __neg__(self) -> "RationalInterval":
        return RationalInterval(-self.hi, -self.lo)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalInterval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RationalInterval(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.contains_zero():
            raise ZeroDivisionError(f"divisor interval contains zero: {other}")
        return self * RationalInterval(1 / other.hi, 1 / other.lo)

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def sqrt_enclosure(x: Fraction, max_width: Fraction) -> RationalInterval:
    """Enclosure [lo, hi] of sqrt(x) with lo**2 <= x <= hi**2 and hi - lo <= max_width.

    Reduces to one integer square root: with x = num/den,
    sqrt(x) = isqrt(num * den * 4**s) / (den * 2**s) up to one unit in the
    last place, where s is chosen so that the granularity meets max_width.
    """
    x = Fraction(x)
    max_width = Fraction(max_width)
    if x < 0:
        raise ValueError(f"square root of negative rational: {x}")
    if max_width <= 0:
        raise ValueError("max_width must be positive")
    if x == 0:
        return RationalInterval.point(0)
    num, den = x.numerator, x.denominator
    s = _ceil_log2(Fraction(1, den) / max_width)
    root = isqrt(num * den << (2 * s))
    scale = den << s
    if root * root == num * den << (2 * s):
        return RationalInterval.point(Fraction(root, scale))
    return RationalInterval(Fraction(root, scale), Fraction(root + 1, scale))


def _dyadic_bounds(y: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """lo <= y <= hi with denominators 2**bits and hi - lo <= 2**-bits."""
    t, rem = divmod(y.numerator << bits, y.denominator)
    lo = Fraction(t, 1 << bits)
    if rem == 0:
        return lo, lo
    return lo, Fraction(t + 1, 1 << bits)


def _atanh_series(u: Fraction, tail_bound: Fraction) -> tuple[Fraction, Fraction]:
    """Partial sum S and remainder bound R with 2*atanh(u) in [S, S + R].

    Requires 0 <= u < 1; terms are positive and the remainder is bounded
    by the geometric series with ratio u**2.
    """
    u2 = u * u
    geom = 1 / (1 - u2)
    power = u  # u**(2j+1)
    total = Fraction(0)
    j = 0
    while True:
        rem = 2 * power * geom / (2 * j + 1)
        if rem <= tail_bound:
            return 2 * total, rem
        total += power / (2 * j + 1)
        power *= u2
        j += 1


def _ln_in_one_two(y: Fraction, max_width: Fraction) -> RationalInterval:
    """Enclosure of ln(y) for y in [1, 2) via 2*atanh((y-1)/(y+1))."""
    if y == 1:
        return RationalInterval.point(0)
    # Round y outward to dyadics first so the series works on short
    # numbers even when y comes from a huge integer.
    bits = _ceil_log2(4 / max_width)
    y_lo, y_hi = _dyadic_bounds(y, bits)
    tol = max_width / 4
    lower, _ = _atanh_series((y_lo - 1) / (y_lo + 1), tol)
    upper_sum, upper_rem = _atanh_series((y_hi - 1) / (y_hi + 1), tol)
    return RationalInterval(lower, upper_sum + upper_rem)


_LN2_LOCK = threading.Lock()
_LN2_SHARED_WIDTH = Fraction(1, 2**256)
_LN2_SHARED: RationalInterval | None = None


def _ln2_enclosure(max_width: Fraction) -> RationalInterval:
    """Enclosure of ln(2) = 2*atanh(1/3).

    Every request that 2**-256 satisfies is served from one shared
    enclosure, so repeated log evaluations see literally the same
    endpoints regardless of call order.  Narrower requests are computed
    fresh.
    """
    global _LN2_SHARED
    if max_width >= _LN2_SHARED_WIDTH:
        if _LN2_SHARED is None:
            with _LN2_LOCK:
                if _LN2_SHARED is None:
                    lo, rem = _atanh_series(Fraction(1, 3), _LN2_SHARED_WIDTH / 2)
                    _LN2_SHARED = RationalInterval(lo, lo + rem)
        return _LN2_SHARED
    lo, rem = _atanh_series(Fraction(1, 3), max_width / 2)
    return RationalInterval(lo, lo + rem)


def ln_enclosure(x: Fraction, max_width: Fraction) -> RationalInterval:
    """Enclosure of the natural logarithm of a positive rational.

    The argument is reduced to [1, 2) by powers of two (using a shared
    ln(2) enclosure), and the remaining piece is summed as
    ``2*atanh((y-1)/(y+1))`` with an explicit geometric bound on the
    truncated tail.
    """
    x = Fraction(x)
    max_width = Fraction(max_width)
    if x <= 0:
        raise ValueError(f"logarithm of non-positive rational: {x}")
    if max_width <= 0:
        raise ValueError("max_width must be positive")
    if x == 1:
        return RationalInterval.point(0)
    if x < 1:
        return -ln_enclosure(1 / x, max_width)
    exponent = x.numerator.bit_length() - x.denominator.bit_length()
    y = x / Fraction(1 << exponent) if exponent >= 0 else x * (1 << -exponent)
    while y >= 2:
        y /= 2
        exponent += 1
    while y < 1:
        y *= 2
        exponent -= 1
    if exponent == 0:
        return _ln_in_one_two(y, max_width)
    series = _ln_in_one_two(y, max_width / 2)
    ln2 = _ln2_enclosure(max_width / (2 * exponent))
    return series + ln2 * exponent


@dataclass(frozen=True)
class ProblemInstance:
    """The rational parameters q = q1/q2 and z = z1/z2 of one series instance.

    All four integers must be nonzero and |q1| > |q2| (equivalently |q| > 1).
    """

    q1: int
    q2: int
    z1: int
    z2: int

    def __post_init__(self):
        for name in ("q1", "q2", "z1", "z2"):
            if getattr(self, name) == 0:
                raise ValueError(f"{name} must be nonzero")
        if abs(self.q1) <= abs(self.q2):
            raise ValueError(
                f"|q| = |{self.q1}/{self.q2}| must exceed 1"
            )

    @classmethod
    def from_rationals(cls, q: Fraction, z: Fraction) -> "ProblemInstance":
        q, z = Fraction(q), Fraction(z)
        return cls(q.numerator, q.denominator, z.numerator, z.denominator)

    @property
    def q(self) -> Fraction:
        return Fraction(self.q1, self.q2)

    @property
    def z(self) -> Fraction:
        return Fraction(self.z1, self.z2)


def log_ratio_enclosure(inst: ProblemInstance, max_width: Fraction) -> RationalInterval:
    """Enclosure of log|q2| / log|q1|, the denominator-to-numerator size ratio of q.

    Exactly [0, 0] when |q2| == 1.  The widths of the two log enclosures
    are refined until the quotient interval meets ``max_width``.
    """
    max_width = Fraction(max_width)
    if max_width <= 0:
        raise ValueError("max_width must be positive")
    a1, a2 = abs(inst.q1), abs(inst.q2)
    if a1 <= 1:
        raise ValueError(f"|q1| must exceed 1, got {a1}")
    if a2 == 1:
        return RationalInterval.point(0)
    w = min(max_width, Fraction(1, 8)) / 2
    while True:
        numerator = ln_enclosure(Fraction(a2), w)
        denominator = ln_enclosure(Fraction(a1), w)
        ratio = numerator / denominator
        if ratio.width <= max_width:
            return ratio
        w /= 4
