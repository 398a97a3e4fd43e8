"""Command-line front end.

Usage:
    morreycircle norm --input f.json --p 1 --lambda 0.5
    morreycircle rearrange --input f.json --out f_star.json
    morreycircle equimeasurable --input f.json --input2 g.json
    morreycircle counterexample --p 1 --lambda 0.5 --eps 0.2 --N 1000

All numeric CSV output uses 17 significant digits so identical configs
produce byte-identical reports.
"""

from __future__ import annotations

import sys

import click

from .circle_step import decreasing_rearrangement, equimeasurable as eq_check
from .counterexample import (
    build_f,
    build_g,
    divergence_lower_bound,
    f_prefix_ratio,
    g_ratio_upper_bound,
    validate_params,
)
from .errors import MorreyCircleError
from .io import load_step_function, save_step_function
from .morrey import MorreyParams, _grid_search, morrey_norm_exact


def _fmt(x):
    return format(float(x), ".17g")


def _emit(text, out_path):
    click.echo(text, nl=False)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


@click.group()
def main():
    """Morrey-space functionals of step functions on the circle."""


@main.command()
@click.option("--input", "input_path", required=True, help="Step function file.")
@click.option("--p", default=1.0, show_default=True)
@click.option("--lambda", "lam", default=0.5, show_default=True)
@click.option("--method", type=click.Choice(["exact", "grid"]), default="exact",
              show_default=True)
@click.option("--refinement", default=4096, show_default=True)
@click.option("--out", "out_path", default=None, help="Also write the CSV here.")
def norm(input_path, p, lam, method, refinement, out_path):
    """Morrey norm of a step function, as a one-row CSV."""
    try:
        f = load_step_function(input_path)
        params = MorreyParams(p, lam)
        if method == "exact":
            res = morrey_norm_exact(f, params)
            value, ratio, arc = res.value, res.ratio_sup, res.argmax
        else:
            value, ratio, arc = _grid_search(f, params, refinement)
    except (MorreyCircleError, OSError) as exc:
        raise click.ClickException(str(exc))
    text = "norm,ratio_sup,arc_start,arc_length\n"
    text += ",".join(_fmt(x) for x in (value, ratio, arc.start, arc.length)) + "\n"
    _emit(text, out_path)


@main.command()
@click.option("--input", "input_path", required=True)
@click.option("--out", "out_path", required=True)
def rearrange(input_path, out_path):
    """Write the decreasing rearrangement of a step function."""
    try:
        f = load_step_function(input_path)
        save_step_function(decreasing_rearrangement(f), out_path)
    except (MorreyCircleError, OSError) as exc:
        raise click.ClickException(str(exc))


@main.command()
@click.option("--input", "input_path", required=True)
@click.option("--input2", "input2_path", required=True)
@click.option("--tol", default=0.0, show_default=True,
              help="Comparison tolerance; 0 demands exact agreement.")
def equimeasurable(input_path, input2_path, tol):
    """Print true/false; exit 0 iff the two functions are equimeasurable."""
    try:
        f = load_step_function(input_path)
        g = load_step_function(input2_path)
        verdict = eq_check(f, g, tol)
    except (MorreyCircleError, OSError) as exc:
        raise click.ClickException(str(exc))
    click.echo("true" if verdict else "false")
    sys.exit(0 if verdict else 1)


def _n_schedule(n_max):
    sched = []
    v = 100
    while v < n_max:
        sched.append(v)
        v *= 10
    sched.append(n_max)
    return sorted(set(s for s in sched if s <= n_max))


@main.command()
@click.option("--p", default=1.0, show_default=True)
@click.option("--lambda", "lam", default=0.5, show_default=True)
@click.option("--eps", default=0.2, show_default=True)
@click.option("--n", "--N", "n_max", default=1000, show_default=True)
@click.option("--t-grid", default="1e-2,1e-3,1e-4", show_default=True,
              help="Comma-separated prefix-arc lengths.")
@click.option("--tail-tol", default=1e-8, show_default=True)
@click.option("--out", "out_path", default=None)
def counterexample(p, lam, eps, n_max, t_grid, tail_tol, out_path):
    """Reproduce the equimeasurable-pair separation report.

    Exit status 0 iff f and g are exactly equimeasurable, every certified
    f-ratio enclosure reaches the divergence bound, and every exact
    g-ratio supremum stays below its upper bound.
    """
    try:
        params = validate_params(p, lam, eps)
        ts = [float(s) for s in t_grid.split(",") if s.strip()]
        f = build_f(params, n_max)
        g = build_g(params, n_max)
        verdict = eq_check(f, g, 0.0)
        lines = [f"equimeasurable,{'true' if verdict else 'false'}", ""]

        ok = verdict
        lines.append("t,ratio_lo,ratio_hi,divergence_bound")
        for t in ts:
            enc = f_prefix_ratio(params, t, tail_tol)
            bound = divergence_lower_bound(params, t)
            ok = ok and enc.hi >= bound
            lines.append(",".join(_fmt(x) for x in (t, enc.lo, enc.hi, bound)))
        lines.append("")

        gbound = g_ratio_upper_bound(params)
        mp = MorreyParams(params.p, params.lam)
        lines.append("N,g_ratio_sup,g_upper_bound")
        for n in _n_schedule(n_max):
            sup = morrey_norm_exact(build_g(params, n), mp).ratio_sup
            ok = ok and sup <= gbound
            lines.append(f"{n}," + _fmt(sup) + "," + _fmt(gbound))
    except (MorreyCircleError, ValueError) as exc:
        raise click.ClickException(str(exc))
    _emit("\n".join(lines) + "\n", out_path)
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
