"""Command-line surface: weight tables, membership tests, extremal-map and
boundary-curve exports, and the verification suite.

Flags mirror the mathematical symbols (--q, --k, --gamma, --alpha, --beta).
Output files land in --out-dir, defaulting to $QCONIC_OUT_DIR or the
current directory. Exit status: 0 success, 1 verification violations or a
failed membership read, 2 bad parameters/input.
"""

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import verify as V
from .conic import ConicParams, boundary_curve, extremal_eval
from .membership import (
    STANDARD_GRID,
    ClassParams,
    convex_membership,
    starlike_membership,
    trust_radius,
)
from .qcalc import QContext
from .qoperator import OperatorParams, weights
from .series import DEFAULT_DEGREE, TruncatedSeries


class ParameterError(ValueError):
    pass


def _check(cond, message):
    if not cond:
        raise ParameterError(message)


def _out_dir(args):
    d = Path(args.out_dir or os.environ.get("QCONIC_OUT_DIR") or ".")
    d.mkdir(parents=True, exist_ok=True)
    return d


def _fmt(x):
    return f"{x:.17g}"


def _mk_class_params(q, alpha, beta, k, gamma):
    _check(0.0 < q < 1.0, "--q must lie strictly in (0, 1)")
    _check(k >= 0.0, "--k must be nonnegative")
    _check(0.0 <= gamma < 1.0, "--gamma must lie in [0, 1)")
    _check(alpha > 0.0, "--alpha must be positive")
    _check(beta > -1.0, "--beta must exceed -1")
    return ClassParams(
        ConicParams(k, gamma), OperatorParams(alpha, beta, QContext(q))
    )


def cmd_coeffs(args):
    _check(0.0 < args.q < 1.0, "--q must lie strictly in (0, 1)")
    _check(args.alpha > 0.0, "--alpha must be positive")
    _check(args.beta > -1.0, "--beta must exceed -1")
    _check(args.n >= 1, "--n must be at least 1")
    w = weights(OperatorParams(args.alpha, args.beta, QContext(args.q)), args.n)
    lines = ["n,psi_n"]
    for n in range(1, args.n + 1):
        lines.append(f"{n},{_fmt(w.psi_n(n))}")
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def load_function(path):
    """Read the function JSON format:
    {"coeffs_re": [...], "coeffs_im": [...],
     "params": {"q":, "alpha":, "beta":, "k":, "gamma":}}."""
    data = json.loads(Path(path).read_text())
    re = np.asarray(data["coeffs_re"], dtype=float)
    im = np.asarray(data.get("coeffs_im", np.zeros_like(re)), dtype=float)
    if re.shape != im.shape:
        raise ParameterError("coeffs_re and coeffs_im lengths differ")
    p = data["params"]
    params = _mk_class_params(
        float(p["q"]), float(p["alpha"]), float(p["beta"]),
        float(p["k"]), float(p["gamma"]),
    )
    # the JSON lists every coefficient, so the function is exactly that
    # polynomial; pad with explicit zeros so tail accounting sees it
    f = TruncatedSeries(re + 1j * im).pad(DEFAULT_DEGREE)
    if not f.is_normalized:
        raise ParameterError("function must be normalized: a0 = 0, a1 = 1")
    return f, params


def verdict_json(verdict):
    return json.dumps(
        {
            "member": verdict.member,
            "worst_margin": verdict.worst_margin,
            "witness_re": verdict.witness.real,
            "witness_im": verdict.witness.imag,
            "tail_estimate": verdict.tail_estimate,
        },
        indent=2,
    )


def cmd_membership(args):
    f, params = load_function(args.input)
    grid = STANDARD_GRID
    if args.max_radius is not None:
        _check(0.0 < args.max_radius < 1.0, "--max-radius must lie in (0, 1)")
        grid = grid.capped(args.max_radius)
    elif args.auto_radius:
        grid = grid.capped(trust_radius(f))
    check = convex_membership if args.convex else starlike_membership
    verdict = check(f, params, grid)
    text = verdict_json(verdict) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if verdict.member else 1


def cmd_extremal(args):
    _check(args.k >= 0.0, "--k must be nonnegative")
    _check(0.0 <= args.gamma < 1.0, "--gamma must lie in [0, 1)")
    _check(0.0 < args.radius < 1.0, "--radius must lie in (0, 1)")
    _check(args.samples >= 2, "--samples must be at least 2")
    params = ConicParams(args.k, args.gamma)
    out = _out_dir(args)
    theta = 2.0 * math.pi * np.arange(args.samples) / args.samples
    vals = extremal_eval(args.radius * np.exp(1j * theta), params)
    lines = ["re,im"] + [f"{_fmt(v.real)},{_fmt(v.imag)}" for v in vals]
    (out / "extremal_samples.csv").write_text("\n".join(lines) + "\n")
    curve = boundary_curve(params, args.samples)
    lines = ["re,im"] + [f"{_fmt(w.real)},{_fmt(w.imag)}" for w in curve]
    (out / "boundary_curve.csv").write_text("\n".join(lines) + "\n")
    print(f"wrote {out/'extremal_samples.csv'} and {out/'boundary_curve.csv'}")
    return 0


def cmd_verify(args):
    if args.suite == "default":
        reports = V.run_default_suite(args.seed)
    else:
        reports = V.run_default_suite(
            args.seed, sufficiency_trials=5, fs_etas=3, extra_members=1
        )
    out = _out_dir(args)
    (out / "verify_reports.json").write_text(V.reports_json(reports) + "\n")
    (out / "verify_summary.csv").write_text(V.summary_csv(reports))
    total = sum(r.violations for r in reports)
    for r in reports:
        if r.violations:
            print(f"FAIL {r.theorem} [{r.params}]: {r.violations} violations")
    print(
        f"{len(reports)} reports, {total} violations "
        f"-> {out/'verify_summary.csv'}"
    )
    return 1 if total else 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="qconic",
        description="q-integral operators, conic extremal maps, and "
        "coefficient-inequality verification",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="operator weight table as CSV")
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--n", type=int, default=10, help="largest weight index")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("membership", help="class-membership verdict as JSON")
    p.add_argument("--input", required=True, help="function JSON path")
    p.add_argument("--convex", action="store_true",
                   help="check the uniformly-convex class instead")
    p.add_argument("--max-radius", type=float, default=None)
    p.add_argument("--auto-radius", action="store_true",
                   help="cap the grid at the series' trust radius")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_membership)

    p = sub.add_parser("extremal",
                       help="extremal-map samples and boundary curve as CSV")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--gamma", type=float, default=0.0)
    p.add_argument("--radius", type=float, default=0.9)
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("--out-dir", default=None)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--suite", choices=("default", "smoke"), default="default")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out-dir", default=None)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
