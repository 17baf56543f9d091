"""Exact rational approximants and irrationality certificates for the Tschakaloff series.

The package evaluates T(z) = sum_n z^n q^(-n(n-1)/2) for rational q, z
with |q| > 1 using rigorous rational-endpoint interval arithmetic,
constructs the classical integer approximant pairs (A_n, B_n), certifies
that the cleared remainders B_n*T(z) - A_n are nonzero and shrinking,
and turns that into finite irrationality certificates plus empirical
confirmation of the growth/decay exponent laws.
"""

from .approximants import (
    ApproximantRecord,
    approximant_denominator,
    approximant_numerator,
    approximant_pair,
    compute_record,
    find_witness,
    normalizer,
)
from .arith import (
    Fraction,
    ProblemInstance,
    RationalInterval,
    decimal_str,
    format_rational,
    golden_shift,
    isqrt,
    ln_enclosure,
    log_ratio_enclosure,
    parse_rational,
    sqrt_enclosure,
)
from .asymptotics import (
    ExponentReport,
    HypothesisResult,
    MeasureEstimate,
    denominator_growth_exponent,
    empirical_exponents,
    estimate_measure,
    gamma0_enclosure,
    hypothesis_check,
    irrationality_exponent_bound,
    remainder_decay_exponent,
)
from .errors import (
    EstimationError,
    InvariantViolationError,
    PrecisionExhaustedError,
    WitnessNotFoundError,
)
from .qpoly import (
    QPolynomial,
    gaussian_binomial,
    pochhammer_coefficient_closed_form,
    pochhammer_coefficient_values,
    pochhammer_coefficients,
    qfactorial,
)
from .series import (
    SeriesTermBudget,
    remainder_series_enclosure,
    theta_enclosure,
    tschakaloff_enclosure,
)

__version__ = "0.1.0"

__all__ = [
    "ApproximantRecord",
    "EstimationError",
    "ExponentReport",
    "Fraction",
    "HypothesisResult",
    "InvariantViolationError",
    "MeasureEstimate",
    "PrecisionExhaustedError",
    "ProblemInstance",
    "QPolynomial",
    "RationalInterval",
    "SeriesTermBudget",
    "WitnessNotFoundError",
    "approximant_denominator",
    "approximant_numerator",
    "approximant_pair",
    "compute_record",
    "decimal_str",
    "denominator_growth_exponent",
    "empirical_exponents",
    "estimate_measure",
    "find_witness",
    "format_rational",
    "gamma0_enclosure",
    "gaussian_binomial",
    "golden_shift",
    "hypothesis_check",
    "irrationality_exponent_bound",
    "isqrt",
    "ln_enclosure",
    "log_ratio_enclosure",
    "normalizer",
    "parse_rational",
    "pochhammer_coefficient_closed_form",
    "pochhammer_coefficient_values",
    "pochhammer_coefficients",
    "qfactorial",
    "remainder_decay_exponent",
    "remainder_series_enclosure",
    "sqrt_enclosure",
    "theta_enclosure",
    "tschakaloff_enclosure",
    "__version__",
]
