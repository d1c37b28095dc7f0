"""Command-line interface.

Subcommands mirror the library surface: ``indicator`` for single
values, ``average`` and ``minimize`` over the three-level moduli angle,
``curve`` for the two-level probability table, ``sample`` for raw
spectra, and ``reproduce-paper`` for the full table of published
values with a pass/fail manifest.

All output is machine readable (JSON or CSV, 12 significant digits) and
deterministic given identical flags, including seed and worker count.
Exit codes: 0 success, 1 numerical failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
from pathlib import Path

import numpy as np

from .errors import ConvergenceError, DomainError
from .indicators import (
    IndicatorResult,
    average_indicator,
    closed_indicator,
    global_indicator,
    minimize_indicator,
    positivity_curve,
    qutrit_indicator_closed_form,
)
from .integrate import (
    McSpec,
    QuadratureSpec,
    sample_bures_spectra,
    sample_hs_spectra,
    sample_mcmc_spectra,
)
from .measures import positive_ball_radius, qubit_ball_volume
from .spectra import MetricKind, ModuliPoint

_WORKERS_ENV = "WIGNERQ_WORKERS"

_ANGLE_RE = re.compile(
    r"^\s*([+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*))?\s*$",
    re.IGNORECASE,
)


def parse_angle(text: str) -> float:
    """Angle in radians from a decimal or a pi-fraction literal such as
    'pi/6', '2pi/9' or '0.5*pi'."""
    m = _ANGLE_RE.match(text)
    if m:
        coeff_s, den_s = m.group(1), m.group(2)
        if coeff_s in ("", "+"):
            coeff = 1.0
        elif coeff_s == "-":
            coeff = -1.0
        else:
            coeff = float(coeff_s)
        value = coeff * math.pi
        if den_s:
            value /= float(den_s)
        return value
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse angle {text!r}")


def _fmt(x) -> str:
    return format(float(x), ".12g")


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get(_WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _emit(args, payload: dict, header: list[str], rows: list[list]) -> None:
    if args.format == "json":
        text = json.dumps(payload, allow_nan=False) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([c if isinstance(c, str) else _fmt(c) for c in row])
        text = buf.getvalue()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _moduli_cell(result: IndicatorResult) -> str:
    d = result.to_json_dict()["moduli"]
    if d is None:
        return ""
    if isinstance(d, str):
        return d
    return _fmt(d)


def _indicator_rows(results: list[IndicatorResult]):
    header = ["value", "error", "metric", "n", "moduli", "method"]
    rows = [
        [r.value, r.error, r.metric.value, str(r.n), _moduli_cell(r), r.method]
        for r in results
    ]
    return header, rows


def _quad_spec(args, default_rel: float) -> QuadratureSpec:
    return QuadratureSpec(
        rel_tol=args.rel_tol if args.rel_tol is not None else default_rel,
        abs_tol=args.abs_tol,
    )


def _mc_spec(args) -> McSpec:
    return McSpec(
        samples=args.samples,
        seed=args.seed,
        workers=args.workers,
        burn_in=args.burn_in,
        thin=args.thin,
        chains_per_worker=args.chains,
    )


def _moduli_for(n: int, zeta) -> ModuliPoint:
    if n == 2:
        if zeta is not None:
            raise DomainError("--zeta applies to n=3 only")
        return ModuliPoint.qubit()
    if n == 3:
        if zeta is None:
            raise DomainError("n=3 requires --zeta")
        return ModuliPoint.qutrit(zeta)
    raise DomainError("the command line covers n in {2, 3}; use the library for larger n")


def cmd_indicator(args) -> int:
    metric = MetricKind.from_name(args.metric)
    moduli = _moduli_for(args.n, args.zeta)
    method = args.method
    if method == "auto":
        closed_exists = args.n == 2 or metric is MetricKind.HS
        method = "closed" if closed_exists else "quad"
    if method == "closed":
        result = closed_indicator(metric, args.n, moduli)
    elif method == "quad":
        result = global_indicator(
            metric, args.n, moduli, _quad_spec(args, 1e-7 if args.n == 3 else 1e-8)
        )
    else:
        result = global_indicator(metric, args.n, moduli, _mc_spec(args), sampler=args.sampler)
    payload = {"command": "indicator", **result.to_json_dict()}
    _emit(args, payload, *_indicator_rows([result]))
    return 0


def cmd_average(args) -> int:
    metrics = list(MetricKind) if args.metric == "all" else [MetricKind.from_name(args.metric)]
    spec = _quad_spec(args, 1e-7)
    results = [average_indicator(m, args.n, spec, inner=args.inner) for m in metrics]
    payload = {"command": "average", "results": [r.to_json_dict() for r in results]}
    _emit(args, payload, *_indicator_rows(results))
    return 0


def cmd_minimize(args) -> int:
    metric = MetricKind.from_name(args.metric)
    spec = None if args.rel_tol is None else _quad_spec(args, args.rel_tol)
    zeta_star, q_star = minimize_indicator(
        metric, args.n, spec, method=args.method, zeta_tol=args.zeta_tol
    )
    payload = {
        "command": "minimize",
        "metric": metric.value,
        "n": 3,
        "zeta_star": zeta_star,
        "q_star": q_star,
        "method": args.method,
    }
    header = ["metric", "n", "zeta_star", "q_star", "method"]
    _emit(args, payload, header, [[metric.value, "3", zeta_star, q_star, args.method]])
    return 0


def cmd_curve(args) -> int:
    radii = np.linspace(0.0, args.r_max, args.points)
    rows = positivity_curve(radii)
    payload = {
        "command": "curve",
        "columns": ["radius", "q_hs", "q_bures", "q_bkm"],
        "rows": [list(r) for r in rows],
    }
    _emit(args, payload, ["radius", "q_hs", "q_bures", "q_bkm"], [list(r) for r in rows])
    return 0


def cmd_sample(args) -> int:
    metric = MetricKind.from_name(args.metric)
    spec = _mc_spec(args)
    sampler = args.sampler
    if sampler == "auto":
        sampler = "mcmc" if metric is MetricKind.BKM else "matrix"
    warnings: tuple[str, ...] = ()
    if sampler == "matrix":
        if metric is MetricKind.HS:
            arr = sample_hs_spectra(args.n, spec)
        elif metric is MetricKind.BURES:
            arr = sample_bures_spectra(args.n, spec)
        else:
            raise DomainError("no matrix model for the BKM measure; use --sampler mcmc")
    else:
        res = sample_mcmc_spectra(metric, args.n, spec)
        arr = res.flat[: spec.samples]
        warnings = res.warnings
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    payload = {
        "command": "sample",
        "metric": metric.value,
        "n": args.n,
        "sampler": sampler,
        "seed": args.seed,
        "workers": args.workers,
        "warnings": list(warnings),
        "spectra": [[float(v) for v in row] for row in arr],
    }
    header = [f"r{i + 1}" for i in range(args.n)]
    _emit(args, payload, header, [list(row) for row in arr])
    return 0


def _reproduce_checks(args):
    """Rows of the published-value table: (name, value, target, kind, tol)."""
    rp = positive_ball_radius()
    checks = []
    prints = {MetricKind.HS: 0.19245, MetricKind.BURES: 0.09172, MetricKind.BKM: 0.0495506}
    qspec1 = QuadratureSpec(rel_tol=1e-9)
    for metric in MetricKind:
        closed = closed_indicator(metric, 2).value
        checks.append((f"qubit_{metric.value}_closed_vs_print", closed, prints[metric], "rel", 1e-4))
        quad = global_indicator(metric, 2, spec=qspec1).value
        checks.append((f"qubit_{metric.value}_quad_vs_closed", quad, closed, "rel", 1e-8))
        mc = global_indicator(metric, 2, spec=_mc_spec(args))
        checks.append((f"qubit_{metric.value}_mc_vs_closed", mc.value, closed, "abs", 3.0 * mc.error))

    qspec2 = QuadratureSpec(rel_tol=1e-7)
    zs = np.linspace(0.0, math.pi / 3.0, 50)
    dev = 0.0
    for z in zs:
        cf = qutrit_indicator_closed_form(z)
        q = global_indicator(MetricKind.HS, 3, ModuliPoint.qutrit(z), qspec2).value
        dev = max(dev, abs(q - cf) / cf)
    checks.append(("qutrit_hs_closed_vs_quad_50pt_max_rel_dev", dev, 0.0, "abs", 1e-6))

    zeta_star, q_star = minimize_indicator(MetricKind.HS, 3)
    checks.append(("qutrit_hs_min_zeta", zeta_star, math.pi / 6.0, "abs", 1e-4))
    checks.append(("qutrit_hs_min_value", q_star, 21.0 / 31104.0, "rel", 1e-6))
    checks.append(("qutrit_hs_min_value_vs_print", q_star, 0.000675, "rel", 1e-3))

    avg_targets = {MetricKind.HS: (0.00136368, 1e-4), MetricKind.BURES: (0.00019165, 1e-2),
                   MetricKind.BKM: (0.00002762, 1e-2)}
    for metric, (target, tol) in avg_targets.items():
        avg = average_indicator(metric, 3, qspec2).value
        checks.append((f"average_{metric.value}_vs_print", avg, target, "rel", tol))
    return checks


def cmd_reproduce(args) -> int:
    if args.fast:
        args.samples = min(args.samples, 100_000)
    rows = []
    all_pass = True
    for name, value, target, kind, tol in _reproduce_checks(args):
        dev = abs(value - target) / (abs(target) if kind == "rel" else 1.0)
        ok = dev <= tol
        all_pass &= ok
        rows.append(
            {"name": name, "value": value, "target": target, "tolerance_kind": kind,
             "tolerance": tol, "deviation": dev, "pass": bool(ok)}
        )
    payload = {"command": "reproduce-paper", "all_pass": all_pass, "checks": rows}
    header = ["name", "value", "target", "tolerance_kind", "tolerance", "deviation", "pass"]
    table = [
        [r["name"], r["value"], r["target"], r["tolerance_kind"], r["tolerance"],
         r["deviation"], "pass" if r["pass"] else "FAIL"]
        for r in rows
    ]
    _emit(args, payload, header, table)
    return 0 if all_pass else 1


def _add_output_flags(p, default_format="json"):
    p.add_argument("--format", choices=("json", "csv"), default=default_format)
    p.add_argument("--out", metavar="PATH", default=None, help="write to file instead of stdout")


def _add_quad_flags(p):
    p.add_argument("--rel-tol", type=float, default=None, help="relative quadrature tolerance")
    p.add_argument("--abs-tol", type=float, default=1e-15)


def _add_mc_flags(p, samples_default=1_000_000):
    p.add_argument("--samples", type=int, default=samples_default)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=_default_workers(),
                   help=f"parallel workers (default ${_WORKERS_ENV} or 1)")
    p.add_argument("--burn-in", type=int, default=10_000)
    p.add_argument("--thin", type=int, default=10)
    p.add_argument("--chains", type=int, default=32, help="Markov chains per worker")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wignerq",
        description="Wigner-positivity volume indicators of qubit and qutrit states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("indicator", help="one indicator value")
    p.add_argument("--metric", required=True)
    p.add_argument("--n", type=int, required=True, choices=(2, 3))
    p.add_argument("--zeta", type=parse_angle, default=None,
                   help="moduli angle for n=3; accepts pi-fractions like pi/6")
    p.add_argument("--method", choices=("auto", "closed", "quad", "mc"), default="auto")
    p.add_argument("--sampler", choices=("matrix", "mcmc"), default=None)
    _add_quad_flags(p)
    _add_mc_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_indicator)

    p = sub.add_parser("average", help="moduli average of the n=3 indicator")
    p.add_argument("--metric", default="all", help="hs, bures, bkm or all")
    p.add_argument("--n", type=int, default=3, choices=(3,))
    p.add_argument("--inner", choices=("auto", "closed", "quadrature"), default="auto")
    _add_quad_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_average)

    p = sub.add_parser("minimize", help="minimize the n=3 indicator over the moduli angle")
    p.add_argument("--metric", required=True)
    p.add_argument("--n", type=int, default=3, choices=(3,))
    p.add_argument("--method", choices=("auto", "closed", "quadrature"), default="auto")
    p.add_argument("--zeta-tol", type=float, default=1e-6)
    _add_quad_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("curve", help="qubit positivity probability on a radius grid")
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--r-max", type=float, default=1.0)
    _add_output_flags(p, default_format="csv")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("sample", help="draw random spectra and write them out")
    p.add_argument("--metric", required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--sampler", choices=("auto", "matrix", "mcmc"), default="auto")
    _add_mc_flags(p, samples_default=10_000)
    _add_output_flags(p, default_format="csv")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("reproduce-paper", help="run the published-value table")
    p.add_argument("--fast", action="store_true", help="cap Monte Carlo at 1e5 samples")
    _add_mc_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
