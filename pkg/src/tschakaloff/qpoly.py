"""Integer-coefficient polynomial algebra in the base q.

The central objects are the coefficient polynomials of the expansion

    (1 - q*T)(1 - q^2*T) ... (1 - q^n*T)  =  sum_k  c_k(q) * T^k,

which drive the whole approximant construction, together with the
q-factorials and Gaussian binomial coefficients that give the same
coefficients in closed form:

    c_k(q) = (-1)^k * gaussian_binomial(n, k) * q^(k(k+1)/2).

Polynomials are dense lists of integers, lowest degree first, with no
trailing zeros; the empty tuple is the zero polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

__all__ = [
    "QPolynomial",
    "pochhammer_coefficients",
    "pochhammer_coefficient_values",
    "pochhammer_coefficient_closed_form",
    "qfactorial",
    "gaussian_binomial",
]


class QPolynomial:
    """Dense polynomial in q with integer coefficients.

    Immutable; supports +, -, *, exact division, Horner evaluation at a
    rational point, and a plain-text rendering for CLI inspection.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, coefficient: int, power: int) -> "QPolynomial":
        """coefficient * q**power"""
        if coefficient == 0:
            return cls()
        return cls((0,) * power + (coefficient,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def shift(self, power: int) -> "QPolynomial":
        """Multiply by q**power."""
        if self.is_zero() or power == 0:
            return self
        return QPolynomial((0,) * power + self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == QPolynomial((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "QPolynomial":
        if isinstance(other, int):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return QPolynomial(summed)

    __radd__ = __add__

    def __sub__(self, other) -> "QPolynomial":
        if isinstance(other, int):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "QPolynomial":
        if isinstance(other, int):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "QPolynomial") -> tuple["QPolynomial", "QPolynomial"]:
        """Long division over the integers; every quotient step must divide exactly."""
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        lead = div[-1]
        quot = [0] * max(0, len(rem) - len(div) + 1)
        for i in range(len(rem) - len(div), -1, -1):
            c = rem[i + len(div) - 1]
            if c == 0:
                continue
            step, leftover = divmod(c, lead)
            if leftover != 0:
                raise ValueError(
                    f"leading coefficient {lead} does not divide {c}; "
                    "division is not exact over the integers"
                )
            quot[i] = step
            for j, d in enumerate(div):
                rem[i + j] -= step * d
        return QPolynomial(quot), QPolynomial(rem)

    def exact_div(self, other: "QPolynomial") -> "QPolynomial":
        """Divide, requiring a zero remainder."""
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero():
            raise ValueError(f"non-exact division: remainder {remainder}")
        return quotient

    def __call__(self, x: Fraction) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            elif power == 1:
                body = "q" if magnitude == 1 else f"{magnitude}*q"
            else:
                body = f"q^{power}" if magnitude == 1 else f"{magnitude}*q^{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coeffs)!r})"


def pochhammer_coefficients(n: int) -> list[QPolynomial]:
    """Coefficients in T of the product (1 - q*T)(1 - q^2*T)...(1 - q^n*T).

    Returns n + 1 polynomials, index k = coefficient of T^k.  Built by
    multiplying in one factor at a time, so each step is a single
    shift-and-subtract per coefficient.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    coeffs = [QPolynomial.one()]
    for j in range(1, n + 1):
        nxt = [QPolynomial.one()]
        for k in range(1, j):
            nxt.append(coeffs[k] - coeffs[k - 1].shift(j))
        nxt.append(-coeffs[j - 1].shift(j))
        coeffs = nxt
    return coeffs


@lru_cache(maxsize=256)
def _coefficient_values(n: int, q: Fraction) -> tuple[Fraction, ...]:
    values = [Fraction(1)]
    qpow = Fraction(1)
    for j in range(1, n + 1):
        qpow *= q
        values = (
            [Fraction(1)]
            + [values[k] - qpow * values[k - 1] for k in range(1, j)]
            + [-qpow * values[j - 1]]
        )
    return tuple(values)


def pochhammer_coefficient_values(n: int, q: Fraction) -> tuple[Fraction, ...]:
    """The values c_k(q) for k = 0..n at a rational point q.

    Same recurrence as :func:`pochhammer_coefficients` specialised at q,
    which keeps the approximant assembly at O(n^2) rational operations
    instead of evaluating degree-n(n+1)/2 polynomials.  Results are
    memoised per (n, q); the cache is semantically invisible.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return _coefficient_values(n, Fraction(q))


def qfactorial(k: int) -> QPolynomial:
    """The polynomial (q - 1)(q^2 - 1)...(q^k - 1) / (q - 1)^k, of degree k(k-1)/2.

    The division is performed as exact polynomial division with a
    zero-remainder check, so the divisibility identity is verified at
    runtime rather than assumed.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    numerator = QPolynomial.one()
    for j in range(1, k + 1):
        numerator *= QPolynomial.monomial(1, j) - 1
    q_minus_one = QPolynomial((-1, 1))
    result = numerator
    for _ in range(k):
        result = result.exact_div(q_minus_one)
    return result


@lru_cache(maxsize=512)
def _gaussian_row(n: int) -> tuple[QPolynomial, ...]:
    row = (QPolynomial.one(),)
    for i in range(1, n + 1):
        prev = row
        mid = [prev[j - 1] + prev[j].shift(j) for j in range(1, i)]
        row = (QPolynomial.one(), *mid, QPolynomial.one())
    return row


def gaussian_binomial(n: int, k: int) -> QPolynomial:
    """Gaussian binomial coefficient as a polynomial in q.

    Computed by the Pascal-type recurrence

        [n, k] = [n-1, k-1] + q^k * [n-1, k],    [n, 0] = 1,

    which stays in integer coefficients throughout.  Equal to the
    quotient qfactorial(n) / (qfactorial(k) * qfactorial(n - k)).
    """
    if k < 0 or k > n:
        raise ValueError(f"k must satisfy 0 <= k <= n, got n={n}, k={k}")
    return _gaussian_row(n)[k]


def pochhammer_coefficient_closed_form(n: int, k: int) -> QPolynomial:
    """Closed form (-1)^k * gaussian_binomial(n, k) * q^(k(k+1)/2).

    Coefficient-by-coefficient equal to pochhammer_coefficients(n)[k];
    the two routes are kept independent so each checks the other.
    """
    if k < 0 or k > n:
        raise ValueError(f"k must satisfy 0 <= k <= n, got n={n}, k={k}")
    poly = gaussian_binomial(n, k).shift(k * (k + 1) // 2)
    return -poly if k % 2 else poly
