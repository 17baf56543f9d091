"""Figure rendering for the report commands.

Figures are diagnostics rendered to files next to the delimited output;
they use midpoint logarithms (converted to floats only at the plotting
boundary) so arbitrarily large integers and arbitrarily tiny remainders
stay on-scale.
"""

from __future__ import annotations

from fractions import Fraction

from .approximants import ApproximantRecord
from .arith import ProblemInstance, ln_enclosure
from .asymptotics import (
    ExponentReport,
    denominator_growth_exponent,
    log_ratio_enclosure,
    remainder_decay_exponent,
)

__all__ = ["save_table_figure", "save_asymptotics_figure"]

_LOG_WIDTH = Fraction(1, 2**24)


def _log10(x: Fraction) -> float:
    """log10 of a positive rational, safe for values far outside float range."""
    ln10 = ln_enclosure(Fraction(10), _LOG_WIDTH).midpoint
    return float(ln_enclosure(x, _LOG_WIDTH).midpoint / ln10)


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_table_figure(
    records: list[ApproximantRecord], inst: ProblemInstance, path: str
) -> None:
    """Growth of |B_n| and decay of the remainder, against the limit laws."""
    plt = _pyplot()
    ns = [r.n for r in records]
    log_b = [_log10(Fraction(abs(r.B))) if r.B else None for r in records]
    log_i = [
        _log10(abs(r.remainder.midpoint)) if r.nonzero_certified else None
        for r in records
    ]
    log_q1 = _log10(Fraction(abs(inst.q1)))
    slope_b = float(denominator_growth_exponent().midpoint)
    gamma = log_ratio_enclosure(inst, _LOG_WIDTH)
    slope_i = float(remainder_decay_exponent(gamma).midpoint)

    fig, (ax_b, ax_i) = plt.subplots(2, 1, figsize=(7, 8), sharex=True)
    ax_b.plot(ns, log_b, "o", ms=3, label="log10 |B_n|")
    ax_b.plot(ns, [slope_b * n * n * log_q1 for n in ns], "-", lw=1,
              label="limit law")
    ax_b.set_ylabel("log10 |B_n|")
    ax_b.legend()
    ax_i.plot(ns, log_i, "o", ms=3, color="C3", label="log10 |B_n T - A_n|")
    ax_i.plot(ns, [slope_i * n * n * log_q1 for n in ns], "-", lw=1,
              color="C2", label="limit law")
    ax_i.set_xlabel("n")
    ax_i.set_ylabel("log10 |remainder|")
    ax_i.legend()
    fig.suptitle(f"Approximants for q={inst.q}, z={inst.z}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_asymptotics_figure(reports: list[ExponentReport], path: str) -> None:
    """Empirical exponent ratios per n with the theoretical limit bands."""
    plt = _pyplot()
    ns = [r.n for r in reports]
    emp_b = [float(r.empirical_B) for r in reports]
    emp_i = [float(r.empirical_I) for r in reports]

    fig, (ax_b, ax_i) = plt.subplots(2, 1, figsize=(7, 8), sharex=True)
    ax_b.plot(ns, emp_b, "o-", ms=3, lw=0.8, label="empirical")
    if reports:
        band = reports[0].theoretical_B
        ax_b.axhline(float(band.midpoint), color="k", lw=1, ls="--",
                     label="theoretical")
    ax_b.set_ylabel("log|B_n| / (n^2 log|q1|)")
    ax_b.legend()
    ax_i.plot(ns, emp_i, "o-", ms=3, lw=0.8, color="C3", label="empirical")
    if reports:
        band = reports[0].theoretical_I
        ax_i.axhline(float(band.midpoint), color="k", lw=1, ls="--",
                     label="theoretical")
    ax_i.set_xlabel("n")
    ax_i.set_ylabel("log|remainder| / (n^2 log|q1|)")
    ax_i.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
