"""Command-line front end.

Four commands cover the pipeline:

* ``eval``         -- enclosure of the series value T(z);
* ``table``        -- per-n approximant records with inline integrality
                      and two-route checks;
* ``asymptotics``  -- empirical vs theoretical exponents, the log-ratio
                      enclosure, the hypothesis verdict, and the fitted
                      irrationality exponent;
* ``prove``        -- a finite certificate 0 < |b * (B T - A)| < 1 ruling
                      out T(z) = a/b for every integer a.

Exit codes: 0 success, 1 hypothesis violation, 2 precision or witness
exhaustion, 3 usage error, 4 internal invariant violation.

Output is deterministic: identical configurations produce byte-identical
reports.  ``--plot`` on the report commands additionally renders a
figure to the given file, leaving the delimited output untouched.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from .approximants import compute_record, find_witness
from .arith import ProblemInstance, decimal_str, parse_rational
from .asymptotics import empirical_exponents, estimate_measure, hypothesis_check
from .errors import (
    EstimationError,
    InvariantViolationError,
    PrecisionExhaustedError,
    WitnessNotFoundError,
)
from .series import SeriesTermBudget, tschakaloff_enclosure

EXIT_OK = 0
EXIT_HYPOTHESIS = 1
EXIT_EXHAUSTED = 2
EXIT_USAGE = 3
EXIT_INVARIANT = 4

_DEFAULT_WIDTH = Fraction(1, 2**64)


def _rational_argument(_ctx, param, value: str) -> Fraction:
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param=param) from exc


def _positive_width(_ctx, param, value: str) -> Fraction:
    try:
        width = parse_rational(value)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param=param) from exc
    if width <= 0:
        raise click.BadParameter("width must be positive", param=param)
    return width


def _validated_instance(q: Fraction, z: Fraction) -> ProblemInstance:
    if q == 0 or abs(q) <= 1:
        raise click.UsageError(f"q must satisfy |q| > 1, got {q}")
    if z == 0:
        raise click.UsageError("z must be nonzero")
    return ProblemInstance.from_rationals(q, z)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _q_z_options(command):
    command = click.option(
        "--q", "q", required=True, callback=_rational_argument,
        help="Base parameter as num or num/den; requires |q| > 1.",
    )(command)
    command = click.option(
        "--z", "z", required=True, callback=_rational_argument,
        help="Argument as num or num/den; must be nonzero.",
    )(command)
    return command


def _common_options(command):
    command = click.option(
        "--width", "width", default="1/18446744073709551616", show_default=True,
        callback=_positive_width,
        help="Target enclosure width (a positive rational, e.g. 1/1000000).",
    )(command)
    command = click.option(
        "--max-terms", "max_terms", default=100_000, show_default=True,
        type=click.IntRange(min=1), help="Series term budget.",
    )(command)
    command = click.option(
        "--format", "fmt", default="text", show_default=True,
        type=click.Choice(["json", "csv", "text"]), help="Report format.",
    )(command)
    command = click.option(
        "--out", "out", default=None, type=click.Path(dir_okay=False, writable=True),
        help="Write the report to this file instead of stdout.",
    )(command)
    return command


@click.group()
@click.version_option()
def cli():
    """Exact approximants and irrationality certificates for q-series values."""


@cli.command("eval")
@_q_z_options
@_common_options
def cmd_eval(q, z, width, max_terms, fmt, out):
    """Evaluate the series T(z) to a certified interval."""
    _validated_instance(q, z)
    enclosure = tschakaloff_enclosure(q, z, SeriesTermBudget(max_terms, width))
    fields = {
        "q": str(q),
        "z": str(z),
        "lo": str(enclosure.lo),
        "hi": str(enclosure.hi),
        "lo_approx": decimal_str(enclosure.lo),
        "hi_approx": decimal_str(enclosure.hi),
        "width": str(enclosure.width),
        "width_approx": decimal_str(enclosure.width, 6),
    }
    if fmt == "json":
        text = json.dumps(fields, indent=2) + "\n"
    elif fmt == "csv":
        header = ",".join(fields)
        row = ",".join(fields.values())
        text = f"{header}\n{row}\n"
    else:
        text = (
            f"T(z) enclosure for q={q}, z={z}\n"
            f"  lo    = {fields['lo']}\n"
            f"        ~ {fields['lo_approx']}\n"
            f"  hi    = {fields['hi']}\n"
            f"        ~ {fields['hi_approx']}\n"
            f"  width ~ {fields['width_approx']}\n"
        )
    _emit(text, out)


_TABLE_COLUMNS = ["n", "m", "A", "B", "I_lo", "I_hi", "nonzero"]


def _record_rows(inst, n_max, width, max_terms):
    budget = SeriesTermBudget(max_terms, width)
    return [compute_record(inst, n, budget) for n in range(1, n_max + 1)]


def _format_table(records, fmt) -> str:
    if fmt == "json":
        return json.dumps([r.to_json_dict() for r in records], indent=2) + "\n"
    if fmt == "csv":
        lines = [",".join(_TABLE_COLUMNS + ["I_lo_approx", "I_hi_approx"])]
        for r in records:
            d = r.to_json_dict()
            lines.append(
                ",".join(
                    [
                        str(d["n"]),
                        str(d["m"]),
                        d["A"],
                        d["B"],
                        d["I_lo"],
                        d["I_hi"],
                        "true" if d["nonzero"] else "false",
                        decimal_str(r.remainder.lo),
                        decimal_str(r.remainder.hi),
                    ]
                )
            )
        return "\n".join(lines) + "\n"
    lines = []
    for r in records:
        lines.append(
            f"n={r.n} m={r.m} A={r.A} B={r.B} "
            f"I=[{decimal_str(r.remainder.lo)}, {decimal_str(r.remainder.hi)}] "
            f"nonzero={'yes' if r.nonzero_certified else 'no'}"
        )
    return "\n".join(lines) + "\n"


@cli.command("table")
@_q_z_options
@_common_options
@click.option("--n-max", "n_max", default=40, show_default=True,
              type=click.IntRange(min=1), help="Largest order n to compute.")
@click.option("--plot", "plot", default=None,
              type=click.Path(dir_okay=False, writable=True),
              help="Also render a growth/decay figure to this file.")
def cmd_table(q, z, width, max_terms, fmt, out, n_max, plot):
    """Emit one approximant record per order n = 1..n_max."""
    inst = _validated_instance(q, z)
    records = _record_rows(inst, n_max, width, max_terms)
    _emit(_format_table(records, fmt), out)
    if plot is not None:
        from .plotting import save_table_figure

        save_table_figure(records, inst, plot)
        click.echo(f"figure written to {plot}", err=True)


def _format_asymptotics(reports, gamma, verdict, measure, fmt) -> str:
    gamma_fields = {
        "gamma_lo": str(gamma.lo),
        "gamma_hi": str(gamma.hi),
        "hypothesis": verdict.satisfied,
    }
    if measure is not None:
        measure_fields = {
            "c_hat": str(measure.c_hat),
            "empirical_exponent": str(measure.empirical_exponent),
            "empirical_exponent_approx": decimal_str(measure.empirical_exponent),
            "predicted_exponent_lo": str(measure.predicted_exponent.lo),
            "predicted_exponent_hi": str(measure.predicted_exponent.hi),
        }
    else:
        measure_fields = {
            "c_hat": None,
            "empirical_exponent": None,
            "empirical_exponent_approx": None,
            "predicted_exponent_lo": None,
            "predicted_exponent_hi": None,
        }
    if fmt == "json":
        rows = [
            {
                "n": r.n,
                "empirical_B": str(r.empirical_B),
                "empirical_B_approx": decimal_str(r.empirical_B),
                "empirical_I": str(r.empirical_I),
                "empirical_I_approx": decimal_str(r.empirical_I),
                "theoretical_B_lo": str(r.theoretical_B.lo),
                "theoretical_B_hi": str(r.theoretical_B.hi),
                "theoretical_I_lo": str(r.theoretical_I.lo),
                "theoretical_I_hi": str(r.theoretical_I.hi),
            }
            for r in reports
        ]
        payload = {**gamma_fields, **measure_fields, "reports": rows}
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        header = [
            "n",
            "empirical_B_approx",
            "empirical_I_approx",
            "theoretical_B_lo",
            "theoretical_B_hi",
            "theoretical_I_lo",
            "theoretical_I_hi",
            "gamma_lo",
            "gamma_hi",
            "hypothesis",
        ]
        lines = [",".join(header)]
        for r in reports:
            lines.append(
                ",".join(
                    [
                        str(r.n),
                        decimal_str(r.empirical_B),
                        decimal_str(r.empirical_I),
                        str(r.theoretical_B.lo),
                        str(r.theoretical_B.hi),
                        str(r.theoretical_I.lo),
                        str(r.theoretical_I.hi),
                        gamma_fields["gamma_lo"],
                        gamma_fields["gamma_hi"],
                        "true" if verdict.satisfied else "false",
                    ]
                )
            )
        return "\n".join(lines) + "\n"
    verdict_text = (
        "gamma < gamma0: hypothesis holds"
        if verdict.satisfied
        else "gamma >= gamma0: hypothesis fails"
    )
    lines = [
        f"gamma in [{decimal_str(gamma.lo)}, {decimal_str(gamma.hi)}]",
        f"gamma0 in [{decimal_str(verdict.gamma0.lo)}, {decimal_str(verdict.gamma0.hi)}]",
        verdict_text,
    ]
    if measure is not None:
        lines.append(
            "fitted irrationality exponent ~ "
            f"{measure_fields['empirical_exponent_approx']} "
            f"(predicted in [{decimal_str(measure.predicted_exponent.lo)}, "
            f"{decimal_str(measure.predicted_exponent.hi)}])"
        )
    if reports:
        theo_b = reports[0].theoretical_B
        theo_i = reports[0].theoretical_I
        lines.append(
            f"theoretical_B ~ {decimal_str(theo_b.midpoint)}  "
            f"theoretical_I ~ {decimal_str(theo_i.midpoint)}"
        )
    for r in reports:
        lines.append(
            f"n={r.n} empirical_B={decimal_str(r.empirical_B, 10)} "
            f"empirical_I={decimal_str(r.empirical_I, 10)}"
        )
    return "\n".join(lines) + "\n"


@cli.command("asymptotics")
@_q_z_options
@_common_options
@click.option("--n-max", "n_max", default=40, show_default=True,
              type=click.IntRange(min=1), help="Largest order n to compute.")
@click.option("--plot", "plot", default=None,
              type=click.Path(dir_okay=False, writable=True),
              help="Also render an exponent-convergence figure to this file.")
def cmd_asymptotics(q, z, width, max_terms, fmt, out, n_max, plot):
    """Empirical vs theoretical exponents, hypothesis verdict, measure fit."""
    inst = _validated_instance(q, z)
    records = _record_rows(inst, n_max, width, max_terms)
    verdict = hypothesis_check(inst)
    reports = empirical_exponents(records, inst)
    try:
        measure = estimate_measure(records, inst)
    except EstimationError:
        measure = None
    gamma = verdict.gamma
    _emit(_format_asymptotics(reports, gamma, verdict, measure, fmt), out)
    if plot is not None:
        from .plotting import save_asymptotics_figure

        save_asymptotics_figure(reports, plot)
        click.echo(f"figure written to {plot}", err=True)


@cli.command("prove")
@_q_z_options
@click.option("--b", "b", required=True, type=click.IntRange(min=1),
              help="Denominator to refute: certifies T(z) != a/b for all a.")
@click.option("--n-max", "n_max", default=40, show_default=True,
              type=click.IntRange(min=1), help="Largest order n to try.")
@click.option("--max-terms", "max_terms", default=100_000, show_default=True,
              type=click.IntRange(min=1), help="Series term budget.")
@click.option("--format", "fmt", default="text", show_default=True,
              type=click.Choice(["json", "csv", "text"]), help="Report format.")
@click.option("--out", "out", default=None,
              type=click.Path(dir_okay=False, writable=True),
              help="Write the certificate to this file instead of stdout.")
def cmd_prove(q, z, b, n_max, max_terms, fmt, out):
    """Produce a finite certificate that T(z) != a/b for every integer a."""
    inst = _validated_instance(q, z)
    verdict = hypothesis_check(inst)
    if not verdict.satisfied:
        click.echo(
            "gamma >= gamma0: method inapplicable "
            f"(gamma in [{decimal_str(verdict.gamma.lo, 10)}, "
            f"{decimal_str(verdict.gamma.hi, 10)}], "
            f"gamma0 ~ {decimal_str(verdict.gamma0.midpoint, 10)})",
            err=True,
        )
        raise SystemExit(EXIT_HYPOTHESIS)
    n, record = find_witness(inst, b, n_max, max_terms)
    scaled = record.remainder * b
    fields = {
        "q": str(q),
        "z": str(z),
        "b": b,
        "n": n,
        "m": record.m,
        "A": str(record.A),
        "B": str(record.B),
        "bI_lo": str(scaled.lo),
        "bI_hi": str(scaled.hi),
        "statement": "0 < |b*I_n| < 1, hence T_q(z) != a/b for all integers a",
    }
    if fmt == "json":
        text = json.dumps(fields, indent=2) + "\n"
    elif fmt == "csv":
        # statement column dropped from csv: free-form text does not belong there
        columns = ["q", "z", "b", "n", "m", "A", "B", "bI_lo", "bI_hi"]
        header = ",".join(columns)
        row = ",".join(str(fields[c]) for c in columns)
        text = f"{header}\n{row}\n"
    else:
        text = (
            f"witness n = {n} (m = {record.m}) for q={q}, z={z}, b={b}\n"
            f"A = {fields['A']}\n"
            f"B = {fields['B']}\n"
            f"b*I enclosure = [{fields['bI_lo']}, {fields['bI_hi']}]\n"
            f"             ~ [{decimal_str(scaled.lo)}, {decimal_str(scaled.hi)}]\n"
            f"{fields['statement']}\n"
        )
    _emit(text, out)


def main(argv: list[str] | None = None) -> int:
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return EXIT_OK
    except click.exceptions.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return EXIT_USAGE
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except SystemExit as exc:
        return int(exc.code or 0)
    except click.exceptions.Abort:
        return EXIT_USAGE
    except (PrecisionExhaustedError, WitnessNotFoundError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_EXHAUSTED
    except InvariantViolationError as exc:
        click.echo(f"internal invariant violation: {exc}", err=True)
        return EXIT_INVARIANT
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
