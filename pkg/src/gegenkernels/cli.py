"""Command-line front end: identity verification, kernel evaluation,
nonnegativity scans, Lebesgue sweeps, and quadrature-rule dumps.

Output contract: --json prints one single-line JSON object with sorted keys;
CSV uses a header row, '.' decimals, 17 significant digits; the default text
mode is a short human-readable summary carrying the identity tag.
"""

import argparse
import json
import os
import re
import sys

import numpy as np

from . import ball_kernels, cube_kernels, identities, quadrature

TEXT_TAGS = {
    "eq:main": "Thm 1.1 / eq:main",
    "poisson-product": "S2 end + Appendix / two-factor Poisson product",
    "eq:Gegen-1": "Thm 1.2 / eq:Gegen-1",
    "eq:Gegen-2": "Thm 1.2 / eq:Gegen-2",
    "eq:addition": "Prop 2.1 / eq:addition",
    "eq:generatingC": "eq:generatingC, first relation",
    "eq:generatingZ": "eq:generatingC, second relation",
    "product-formula": "S3.2 / Gegenbauer product formula",
    "eq:HG": "eq:HG / Hermite-Genocchi",
    "eq:intGx": "eq:intGx / averaging-operator transfer",
}


def _floats(text: str):
    try:
        vals = [float(v) for v in text.split(",") if v != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated reals, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("expected a nonempty comma-separated list")
    return vals


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def _json_line(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _report_dict(rep: identities.IdentityReport) -> dict:
    return {"identity": rep.identity, "lhs": rep.lhs, "rhs": rep.rhs,
            "abs_err": rep.abs_err, "rel_err": rep.rel_err,
            "order": rep.order, "params": rep.params}


def _emit_report(rep, args, out=sys.stdout):
    if getattr(args, "json", False):
        print(_json_line(_report_dict(rep)), file=out)
        return
    tag = TEXT_TAGS.get(rep.identity, rep.identity)
    print(f"[{tag}]", file=out)
    print(f"  lhs     = {_fmt(rep.lhs)}", file=out)
    print(f"  rhs     = {_fmt(rep.rhs)}", file=out)
    print(f"  abs_err = {rep.abs_err:.3e}   rel_err = {rep.rel_err:.3e}"
          f"   order = {rep.order}", file=out)


def _emit_value(value: float, params: dict, args, out=sys.stdout):
    if getattr(args, "json", False):
        print(_json_line({"value": value, "params": params}), file=out)
    else:
        print(_fmt(value), file=out)


def _open_out(path):
    return open(path, "w", newline="") if path else None


# ----------------------------------------------------------------------------
# Subcommand handlers


def _cmd_verify(args) -> int:
    if args.which == "main":
        rep = identities.verify_main_identity(args.lam, args.x, args.r, args.order)
    elif args.which == "poisson":
        rep = identities.verify_poisson_product(args.lam[0], args.mu, args.s,
                                                args.t, args.r, args.order)
    elif args.which == "gegen1":
        rep = identities.verify_gegen1(args.n, args.lam[0], args.mu,
                                       args.x[0], args.order)
    elif args.which == "gegen2":
        rep = identities.verify_gegen2(args.n, args.lam[0], args.mu,
                                       args.x[0], args.order)
    elif args.which == "addition":
        rep = identities.verify_addition_formula(args.n, args.lam[0], args.mu,
                                                 args.theta, args.phi,
                                                 args.t, args.s)
    elif args.which == "generating":
        rep_c, rep_z = identities.verify_generating(args.lam[0], args.r,
                                                    args.t, args.N)
        _emit_report(rep_c, args)
        _emit_report(rep_z, args)
        return 0
    elif args.which == "product":
        rep = identities.verify_product_formula(args.n, args.lam[0],
                                                args.x[0], args.y[0], args.order)
    else:  # hermite-genocchi
        rep = identities.verify_hermite_genocchi(args.xs, np.exp, np.exp,
                                                 args.order)
    _emit_report(rep, args)
    return 0


def _cmd_kernel(args) -> int:
    if args.which == "cube":
        w = cube_kernels.CubeWeight(tuple(args.lam))
        y = args.y if args.y is not None else [1.0] * w.d
        params = {"n": args.n, "lambda": args.lam, "x": args.x, "y": y,
                  "form": "direct" if args.direct else "closed"}
        if args.direct:
            value = cube_kernels.kernel_cube_direct(args.n, w, args.x, y)
        else:
            if any(v != 1.0 for v in y):
                raise ValueError("the closed cube form exists only at y = ones; "
                                 "use --direct for general y")
            value = cube_kernels.kernel_cube_at_one_closed(args.n, w, args.x,
                                                           args.order)
    else:
        w = ball_kernels.BallWeight(args.lam[0], args.mu, args.d)
        params = {"n": args.n, "d": args.d, "lambda": args.lam[0], "mu": args.mu,
                  "x": args.x, "y": args.y,
                  "form": "direct" if args.direct else "closed"}
        if args.direct:
            value = ball_kernels.kernel_ball_direct(args.n, w, args.x, args.y)
        else:
            value = ball_kernels.kernel_ball(args.n, w, args.x, args.y, args.order)
    _emit_value(value, params, args)
    return 0


def _cmd_cesaro(args) -> int:
    if args.which == "gegenbauer":
        value = cube_kernels.cesaro_kernel_gegenbauer(args.n, args.delta,
                                                      args.lam[0], args.s, args.t)
        params = {"n": args.n, "delta": args.delta, "lambda": args.lam[0],
                  "s": args.s, "t": args.t}
    elif args.which == "cube":
        w = cube_kernels.CubeWeight(tuple(args.lam))
        value = cube_kernels.cesaro_kernel_cube_at_one(args.n, args.delta, w,
                                                       args.x, args.order)
        params = {"n": args.n, "delta": args.delta, "lambda": args.lam,
                  "x": args.x}
    else:
        w = ball_kernels.BallWeight(args.lam[0], args.mu, args.d)
        value = ball_kernels.cesaro_kernel_ball(args.n, args.delta, w,
                                                args.x, args.y, args.order)
        params = {"n": args.n, "delta": args.delta, "d": args.d,
                  "lambda": args.lam[0], "mu": args.mu,
                  "x": args.x, "y": args.y}
    _emit_value(value, params, args)
    return 0


def _cmd_scan(args) -> int:
    w = cube_kernels.CubeWeight(tuple(args.lam))
    report = cube_kernels.nonnegativity_scan(args.n, args.delta, w, args.grid)
    dest = _open_out(args.out)
    out = dest or sys.stdout
    try:
        header = ",".join(f"x{i + 1}" for i in range(w.d)) + ",K"
        print(header, file=out)
        for point, value in zip(report.points, report.values):
            row = ",".join(_fmt(v) for v in point) + "," + _fmt(value)
            print(row, file=out)
    finally:
        if dest:
            dest.close()
    print(f"min K = {_fmt(report.min_value)} at "
          f"({', '.join(_fmt(v) for v in report.argmin)})", file=sys.stderr)
    return 0


def _cmd_sweep(args) -> int:
    w = ball_kernels.BallWeight(args.lam[0], args.mu, args.d)
    threads = args.threads or int(os.environ.get("GEGENKERNELS_THREADS", "1"))
    result = ball_kernels.critical_index_sweep(
        w, args.deltas, [int(n) for n in args.degrees], args.order, threads)
    dest = _open_out(args.csv)
    out = dest or sys.stdout
    try:
        print("delta,n,lebesgue,critical_value", file=out)
        for delta, n, leb in result.rows:
            print(f"{_fmt(delta)},{n},{_fmt(leb)},{_fmt(result.critical_value)}",
                  file=out)
    finally:
        if dest:
            dest.close()
    return 0


def _cmd_quad(args) -> int:
    if args.kind == "gauss-jacobi":
        rule = quadrature.gauss_jacobi(args.n, args.alpha, args.beta)
        params = {"n": args.n, "alpha": args.alpha, "beta": args.beta}
    elif args.kind == "beta":
        rule = quadrature.beta_rule(args.n, args.a, args.b)
        params = {"n": args.n, "a": args.a, "b": args.b}
    elif args.kind == "simplex":
        rule = quadrature.simplex_rule(args.d, args.exponents, args.n)
        params = {"d": args.d, "exponents": args.exponents, "n": args.n}
    else:  # ball
        rule = quadrature.ball_rule(args.d, args.lam[0], args.mu, args.n)
        params = {"d": args.d, "lambda": args.lam[0], "mu": args.mu, "n": args.n}
    nodes = rule.nodes.tolist()
    payload = {"kind": args.kind, "params": params, "nodes": nodes,
               "weights": rule.weights.tolist(), "exactness": rule.exactness}
    text = _json_line(payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


# ----------------------------------------------------------------------------
# Parser


def _add_common(p, order_default=None):
    p.add_argument("--order", type=int, default=order_default,
                   help="quadrature order override")
    p.add_argument("--json", action="store_true", help="single-line JSON output")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gegenkernels",
        description="Identity verification and reproducing/Cesaro kernels for "
                    "Gegenbauer-type weights on the cube and the ball.")
    sub = ap.add_subparsers(dest="command", required=True)

    vp = sub.add_parser("verify", help="check one identity, both sides evaluated independently")
    vsub = vp.add_subparsers(dest="which", required=True)

    p = vsub.add_parser("main")
    p.add_argument("--lambda", dest="lam", type=_floats, required=True)
    p.add_argument("--x", type=_floats, required=True)
    p.add_argument("--r", type=float, required=True)
    _add_common(p)
    p = vsub.add_parser("poisson")
    p.add_argument("--lambda", dest="lam", type=_floats, required=True)
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--r", type=float, required=True)
    _add_common(p)
    for name in ("gegen1", "gegen2"):
        p = vsub.add_parser(name)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--lambda", dest="lam", type=_floats, required=True)
        p.add_argument("--mu", type=float, required=True)
        p.add_argument("--x", type=_floats, required=True)
        _add_common(p)
    p = vsub.add_parser("addition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_floats, required=True)
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--phi", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--s", type=float, required=True)
    _add_common(p)
    p = vsub.add_parser("generating")
    p.add_argument("--lambda", dest="lam", type=_floats, required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--N", type=int, required=True)
    _add_common(p)
    p = vsub.add_parser("product")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_floats, required=True)
    p.add_argument("--x", type=_floats, required=True)
    p.add_argument("--y", type=_floats, required=True)
    _add_common(p)
    p = vsub.add_parser("hermite-genocchi")
    p.add_argument("--xs", type=_floats, required=True)
    _add_common(p)

    kp = sub.add_parser("kernel", help="evaluate one reproducing kernel")
    ksub = kp.add_subparsers(dest="which", required=True)
    p = ksub.add_parser("cube")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_floats, required=True)
    p.add_argument("--x", type=_floats, required=True)
    p.add_argument("--y", type=_floats, default=None)
    form = p.add_mutually_exclusive_group()
    form.add_argument("--closed", action="store_true", default=True)
    form.add_argument("--direct", action="store_true")
    _add_common(p)
    p = ksub.add_parser("ball")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_floats, required=True)
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--x", type=_floats, required=True)
    p.add_argument("--y", type=_floats, required=True)
    form = p.add_mutually_exclusive_group()
    form.add_argument("--closed", action="store_true", default=True)
    form.add_argument("--direct", action="store_true")
    _add_common(p)

    cp = sub.add_parser("cesaro", help="evaluate one Cesaro kernel")
    csub = cp.add_subparsers(dest="which", required=True)
    p = csub.add_parser("gegenbauer")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=_floats, required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    _add_common(p)
    p = csub.add_parser("cube")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=_floats, required=True)
    p.add_argument("--x", type=_floats, required=True)
    _add_common(p)
    p = csub.add_parser("ball")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_floats, required=True)
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--x", type=_floats, required=True)
    p.add_argument("--y", type=_floats, required=True)
    _add_common(p)

    sp = sub.add_parser("scan", help="grid scans")
    ssub = sp.add_subparsers(dest="which", required=True)
    p = ssub.add_parser("cube-nonneg")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=_floats, required=True)
    p.add_argument("--grid", type=int, required=True)
    p.add_argument("--out", default=None, help="CSV output path (default stdout)")

    wp = sub.add_parser("sweep", help="parameter sweeps")
    wsub = wp.add_subparsers(dest="which", required=True)
    p = wsub.add_parser("critical")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_floats, required=True)
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--deltas", type=_floats, required=True)
    p.add_argument("--degrees", type=_floats, required=True)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--csv", default=None, help="CSV output path (default stdout)")

    qp = sub.add_parser("quad", help="quadrature rules")
    qsub = qp.add_subparsers(dest="which", required=True)
    p = qsub.add_parser("dump")
    p.add_argument("--kind", required=True,
                   choices=["gauss-jacobi", "beta", "simplex", "ball"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--exponents", type=_floats, default=None)
    p.add_argument("--lambda", dest="lam", type=_floats, default=[0.5])
    p.add_argument("--mu", type=float, default=1.0)
    p.add_argument("--out", default=None)
    _allow_negative_values(ap)
    return ap


# values like "--lambda -1,1" must reach the domain check (exit 1), not be
# mistaken for option flags (exit 2)
_NEG_NUM = re.compile(r"^-(\d+\.?\d*|\.\d+)(,.+)?$")


def _allow_negative_values(parser):
    parser._negative_number_matcher = _NEG_NUM
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for sub in action.choices.values():
                _allow_negative_values(sub)


_HANDLERS = {
    "verify": _cmd_verify,
    "kernel": _cmd_kernel,
    "cesaro": _cmd_cesaro,
    "scan": _cmd_scan,
    "sweep": _cmd_sweep,
    "quad": _cmd_quad,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
