"""Command-line front end: tables, zero datasets, and experiment runs.

Every subcommand validates its request, computes through the library
modules, and writes a deterministic CSV or JSON artifact to the requested
output (stdout by default). Computation failures exit with status 1 and a
machine-readable JSON error on stderr; usage errors exit with status 2.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from functools import wraps
from typing import List, Optional, Sequence

import click

from . import bell as bell_mod
from . import rhscan as rhscan_mod
from . import sumrules as sr
from . import translate as tr
from .datasets import cached_dataset
from .errors import ZetasumsError
from .special import FunctionId

_DS_TMAX = {
    FunctionId.XI: 2520.0,
    FunctionId.T_PLUS: 1000.0,
    FunctionId.T_MINUS: 1000.0,
    FunctionId.L4_COMPLETED: 1126.33,
}

_FUNin = click.Choice(["xi", "tplus", "tminus", "l4c"])


def _function(name: str) -> FunctionId:
    return FunctionId(name)


def _default_dataset(f: FunctionId):
    return cached_dataset(
        f, _DS_TMAX[f], None, include_real_axis=(f is FunctionId.T_MINUS)
    )


def _parse_range(text: str) -> List[int]:
    """Parse "3..6" or "4" into an inclusive integer list."""
    parts = text.split("..")
    try:
        if len(parts) == 1:
            return [int(parts[0])]
        if len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
            if lo > hi:
                raise ValueError
            return list(range(lo, hi + 1))
    except ValueError:
        pass
    raise click.UsageError(f"cannot parse integer range {text!r}")


def _emit(
    rows: Sequence[Sequence],
    header: Sequence[str],
    fmt: str,
    output: Optional[str],
    precision_lines: Optional[List[str]] = None,
) -> None:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        if precision_lines:
            for line in precision_lines:
                buf.write(f"# {line}\n")
        text = buf.getvalue()
    else:
        payload = {"rows": [dict(zip(header, row)) for row in rows]}
        if precision_lines:
            payload["precision_report"] = precision_lines
        text = json.dumps(payload, indent=2) + "\n"
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _emit_json(payload: dict, output: Optional[str]) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _computation_guard(fn):
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ZetasumsError as exc:
            err = {"error": type(exc).__name__, "message": str(exc)}
            click.echo(json.dumps(err), err=True)
            sys.exit(1)

    return wrapper


def _common(fn):
    fn = click.option(
        "--format",
        "fmt",
        type=click.Choice(["csv", "json"]),
        default="csv",
        show_default=True,
    )(fn)
    fn = click.option("--output", type=click.Path(writable=True), default=None)(fn)
    fn = click.option("--precision-report", is_flag=True, default=False)(fn)
    return fn


@click.group()
def main() -> None:
    """Zeros and zero-power sum rules for Riemann-zeta-type functions."""


@main.command()
@click.option("--function", "fname", type=_FUNin, required=True)
@click.option("--t-max", type=float, default=None, help="scan height (default per function)")
@click.option("--grid-step", type=float, default=None)
@click.option("--include-real-axis", is_flag=True, default=False)
@_common
@_computation_guard
def zeros(fname, t_max, grid_step, include_real_axis, fmt, output, precision_report):
    """Critical-line (and optional real-axis) zero dataset."""
    f = _function(fname)
    if t_max is None:
        t_max = _DS_TMAX[f]
    ds = cached_dataset(f, t_max, grid_step, include_real_axis)
    rows = [
        (r.function.value, r.index, r.location_kind, repr(r.t_or_x), repr(r.residual))
        for r in ds.records
    ]
    extra = (
        [f"max residual {max((r.residual for r in ds.records), default=0.0):.3e}"]
        if precision_report
        else None
    )
    _emit(rows, ["function", "index", "kind", "t_or_x", "residual"], fmt, output, extra)


@main.command()
@click.option("--function", "fname", type=_FUNin, required=True)
@click.option("--m", "m_text", default="1..6", show_default=True)
@_common
@_computation_guard
def sumrule(fname, m_text, fmt, output, precision_report):
    """Power sums over zeros: derivative route vs zero route."""
    f = _function(fname)
    m_range = _parse_range(m_text)
    ds = _default_dataset(f)
    table = sr.verify_sum_rule(f, ds, m_range)
    rows = [
        (m, f"{lhs:.10f}", f"{rhs:.10f}", f"{diff:.3e}") for m, lhs, rhs, diff in table
    ]
    extra = (
        [f"max |difference| {max(abs(d) for *_, d in table):.3e}"]
        if precision_report
        else None
    )
    _emit(rows, ["m", "derivative_route", "zero_route", "difference"], fmt, output, extra)


@main.command()
@click.option("--function", "fname", type=_FUNin, required=True)
@click.option("--order", type=int, default=30, show_default=True)
@_common
@_computation_guard
def keiper(fname, order, fmt, output, precision_report):
    """tau and lambda coefficients from the sigma series."""
    f = _function(fname)
    sig = sr.sigma_series_derivative(f, order + 1)
    kc = sr.tau_lambda_from_sigma(sig, order)
    rows = [
        (k, repr(kc.tau[k].real), repr(kc.lam[k + 1].real)) for k in range(order)
    ]
    extra = None
    if precision_report:
        r1, r2, r3 = sr.keiper_identity_residuals(sig)
        extra = [f"identity residuals {r1:.3e} {r2:.3e} {r3:.3e}"]
    _emit(rows, ["k", "tau_k", "lambda_k_plus_1"], fmt, output, extra)


@main.command()
@click.option("--function", "fname", type=_FUNin, required=True)
@click.option("--order", type=int, default=8, show_default=True)
@_common
@_computation_guard
def bell(fname, order, fmt, output, precision_report):
    """Taylor coefficients rebuilt from the sigma series via Bell polynomials."""
    f = _function(fname)
    sig = sr.sigma_series_derivative(f, order)
    ps = bell_mod.series_from_sigma(1.0, sig, order)
    rows = [(k, repr(ps.coeffs[k].real)) for k in range(order + 1)]
    _emit(rows, ["k", "coefficient"], fmt, output, None)


@main.command()
@click.option("--order", type=int, default=10, show_default=True)
@_common
@_computation_guard
def link(order, fmt, output, precision_report):
    """Cross-function linkage residuals (xi vs T-tilde pair)."""
    reports = bell_mod.verify_link3(order)
    rows = [
        (r.order, repr(r.lhs_coeff), repr(r.rhs_coeff), f"{r.residual:.3e}")
        for r in reports
    ]
    extra = (
        [f"max residual {max(r.residual for r in reports):.3e}"]
        if precision_report
        else None
    )
    _emit(rows, ["k", "lhs", "rhs", "residual"], fmt, output, extra)


@main.command()
@click.option("--function", "fname", type=_FUNin, required=True)
@click.option("--z0", type=str, required=True, help="complex center, e.g. 0.1+0.05j")
@click.option("--m", type=int, required=True)
@click.option("--terms", type=int, default=40, show_default=True)
@_common
@_computation_guard
def translate(fname, z0, m, terms, fmt, output, precision_report):
    """Translated zero-power sum at z0, both routes."""
    f = _function(fname)
    try:
        center = complex(z0)
    except ValueError:
        raise click.UsageError(f"cannot parse complex number {z0!r}")
    series_f = sr._series_function(f)
    sig = sr.sigma_series_derivative(f, m + terms)
    via_series = tr.translated_sigma_series(sig, center, m, terms)
    via_direct = tr.translated_sigma_direct(series_f, center, m)
    payload = {
        "function": f.value,
        "z0": [center.real, center.imag],
        "m": m,
        "series_route": [via_series.value.real, via_series.value.imag],
        "derivative_route": [via_direct.value.real, via_direct.value.imag],
        "route_difference": abs(via_series.value - via_direct.value),
    }
    _emit_json(payload, output)


@main.command()
@click.option(
    "--pair",
    type=click.Choice(["tminus:xihalf", "tplus:xihalf"]),
    required=True,
)
@click.option("--mode", type=click.Choice(["between", "after"]), default=None)
@click.option("--n", "n_check", type=int, default=1500, show_default=True)
@click.option("--t0", type=float, default=0.0, show_default=True)
@_common
@_computation_guard
def interlace(pair, mode, n_check, t0, fmt, output, precision_report):
    """Interlacing failures between a zero sequence and half-shifted xi zeros."""
    a_name = pair.split(":")[0]
    if mode is None:
        mode = "between" if a_name == "tminus" else "after"
    a_f = FunctionId.T_MINUS if a_name == "tminus" else FunctionId.T_PLUS
    a = _default_dataset(a_f).ordinates()
    b = tr.xi_halfshift_ordinates(_default_dataset(FunctionId.XI))
    report = tr.interlacing_report(
        a, b, mode, t0=t0, n_check=n_check, pair=(a_name, "xihalf")
    )
    _emit_json(report.as_dict(), output)


@main.command()
@click.option("--range", "range_text", required=True, help="t range, e.g. 410..420")
@_common
@_computation_guard
def rhscan(range_text, fmt, output, precision_report):
    """Derivative zeros of V and the modulus condition over a t range."""
    parts = range_text.split("..")
    if len(parts) != 2:
        raise click.UsageError(f"cannot parse range {range_text!r}")
    try:
        t_lo, t_hi = float(parts[0]), float(parts[1])
    except ValueError:
        raise click.UsageError(f"cannot parse range {range_text!r}")
    reports = rhscan_mod.find_derivative_zeros(t_lo, t_hi)
    rows = [
        (
            f"{r.centroid_t:.6f}",
            f"{r.s_d.real:.6f}",
            f"{r.s_d.imag:.6f}",
            f"{r.modulus:.6f}",
            r.triplet_kind,
            r.condition_met,
        )
        for r in reports
    ]
    _emit(
        rows,
        ["t_centroid", "re_s_d", "im_s_d", "modulus", "kind", "condition_met"],
        fmt,
        output,
        None,
    )


@main.command()
@click.option("--resolution", type=float, default=1e-4, show_default=True)
@_common
@_computation_guard
def ystar(resolution, fmt, output, precision_report):
    """Collision parameter y* of the two-term xi_1 family."""
    value = rhscan_mod.lagarias_suzuki_y_star(resolution)
    _emit_json({"y_star": value, "resolution": resolution}, output)


if __name__ == "__main__":
    main()
