"""Command-line interface.

Exit status: 0 when the requested check passed, 1 when it failed (reports are
still written), 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import verify as V
from .fnspec import FunctionSpecError, HarmonicText, ShearText, build_map, parse_function
from .mapcore import SHS_CONSTANTS, slice_map
from .powerseries import SeriesError
from .render import RenderError, RenderSpec, render_grid
from .shearing import CATALOG, ShearError, ShearSpec, koebe_slice_coeff, shear

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# numeric knobs that may also come from --config; flags win
DEFAULTS = {
    "order": 64,
    "radii": 32,
    "angles": 128,
    "r_max": 0.95,
    "curve_angles": 512,
    "grid": 360,
    "samples": 4000,
    "sample_r_max": 0.98,
    "lambdas": 32,
    "jobs": 1,
    "coeff_tol": V.DEFAULT_TOL.coeff,
    "pointwise_tol": V.DEFAULT_TOL.pointwise,
    "geometry_tol": V.DEFAULT_TOL.geometry,
    "delta": V.DEFAULT_TOL.collision_delta,
    "seed": 0,
    "count": 100,
}


def _fmt(c: complex) -> str:
    c = complex(c)
    if abs(c.imag) <= 1e-12 * max(1.0, abs(c.real)):
        return f"{c.real:.12g}"
    return f"{c.real:.12g}{c.imag:+.12g}j"


def _theta_label(theta: float) -> str:
    frac = theta / math.pi
    if abs(frac - 1) < 1e-12:
        return "π"
    if abs(frac) < 1e-12:
        return "0"
    return f"{frac:.6g}π"


def _add_common(p, fn=True):
    if fn:
        p.add_argument("--fn", required=True, help='function spec, e.g. "harmonic_koebe" or "f1(n=3)"')
    p.add_argument("--order", type=int, default=None, help="truncation order of the series")
    p.add_argument("--out", type=Path, default=None, help="write the JSON report / SVG here")


def _add_grid(p):
    p.add_argument("--radii", type=int, default=None)
    p.add_argument("--angles", type=int, default=None)
    p.add_argument("--r-max", dest="r_max", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="harmshear", description=__doc__.splitlines()[0])
    ap.add_argument("--config", type=Path, default=None, help="JSON file with default values for numeric flags")
    ap.add_argument("--jobs", type=int, default=None, help="worker threads for grid scans")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("catalog", help="list catalogue functions and parameter domains")

    p = sub.add_parser("coeffs", help="print the a_n, b_n table")
    _add_common(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("shear", help="shear construction from rational phi and omega")
    p.add_argument("--phi", required=True, help="rational p/q as [p0,p1,..]/[q0,q1,..], or 'koebe'")
    p.add_argument("--omega", required=True)
    p.add_argument("--theta", default="pi", help="epsilon = exp(i theta); pi is the classical shear")
    _add_common(p, fn=False)

    p = sub.add_parser("verify", help="run a named check and write a JSON report")
    p.add_argument("check", choices=["bounds", "growth", "jacobian", "derivative", "curvature",
                                     "chain", "slice", "constants", "local", "alexander"])
    p.add_argument("--fn", default="harmonic_koebe")
    p.add_argument("--class", dest="cls", default="SH0S", choices=sorted(V.COEFF_CLASSES))
    p.add_argument("--curve-radii", default=None, help="comma separated radii for the curvature check (rho allowed)")
    p.add_argument("--curve-angles", dest="curve_angles", type=int, default=None)
    p.add_argument("--count", type=int, default=None, help="random specs for the chain check")
    p.add_argument("--seed", type=int, default=None)
    for k in ("coeff_tol", "pointwise_tol"):
        p.add_argument("--" + k.replace("_", "-"), dest=k, type=float, default=None)
    _add_common(p, fn=False)
    _add_grid(p)

    p = sub.add_parser("curvature", help="curvature of circle images against the bounds")
    _add_common(p)
    p.add_argument("--r", dest="rs", default="0.05,rho,0.3,0.6")
    p.add_argument("--curve-angles", dest="curve_angles", type=int, default=None)

    p = sub.add_parser("radius", help="sampled radius of convexity")
    _add_common(p)
    p.add_argument("--curve-angles", dest="curve_angles", type=int, default=None)
    p.add_argument("--geometry-tol", dest="geometry_tol", type=float, default=None)

    p = sub.add_parser("theta-search", help="angles theta for which h + e^{i theta} g passes the univalence filters")
    _add_common(p)
    p.add_argument("--grid", type=int, default=None, help="number of theta cells")
    p.add_argument("--coeff-order", dest="coeff_order", type=int, default=40)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--sample-r-max", dest="sample_r_max", type=float, default=None)
    p.add_argument("--delta", type=float, default=None)

    p = sub.add_parser("stability", help="check every slice h + lam g")
    _add_common(p)
    p.add_argument("--mode", choices=["univalent", "convex"], default="univalent")
    p.add_argument("--lambdas", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--sample-r-max", dest="sample_r_max", type=float, default=None)
    p.add_argument("--delta", type=float, default=None)

    p = sub.add_parser("render", help="SVG of the image of circles and radii")
    _add_common(p)
    p.add_argument("--slice", dest="slice_theta", default=None, help="draw the analytic slice h + e^{i theta} g instead")
    p.add_argument("--rays", type=int, default=16)
    p.add_argument("--circles", type=int, default=8)
    p.add_argument("--samples-per-curve", type=int, default=512)
    p.add_argument("--r-max", dest="r_max", type=float, default=None)
    p.add_argument("--size", type=int, default=600)
    return ap


def _resolve(args):
    """Fill unset knobs from --config, then from DEFAULTS."""
    cfg = {}
    if args.config is not None:
        cfg = json.loads(args.config.read_text())
        unknown = set(cfg) - set(DEFAULTS)
        if unknown:
            raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
    for key, default in DEFAULTS.items():
        if getattr(args, key, None) is None:
            setattr(args, key, cfg.get(key, default))
    if args.command == "render" and "r_max" not in cfg and args.r_max == DEFAULTS["r_max"]:
        args.r_max = RenderSpec.r_max
    return args


def _tolerances(args) -> V.Tolerances:
    return V.Tolerances(coeff=args.coeff_tol, pointwise=args.pointwise_tol, geometry=args.geometry_tol,
                        collision_delta=args.delta)


def _emit(report: V.Report, out: Path | None) -> int:
    text = report.to_json(indent=2)
    if out is not None:
        out.write_text(text + "\n")
    status = "PASS" if report.passed else "FAIL"
    print(f"{report.check_name}: {status} (worst margin {report.worst_margin:.6g}, witness {json.dumps(report.witness, default=V._json_default)})")
    return EXIT_OK if report.passed else EXIT_FAIL


def _parse_radii(s: str):
    out = []
    for tok in s.split(","):
        tok = tok.strip()
        out.append(SHS_CONSTANTS.rho if tok == "rho" else float(tok))
    return out


def _print_table(f, order, out=None):
    out = out or sys.stdout
    print(f"{'n':>4}  {'a_n':>24}  {'b_n':>24}", file=out)
    for n in range(0, order + 1):
        print(f"{n:>4}  {_fmt(f.a(n)):>24}  {_fmt(f.b(n)):>24}", file=out)


def cmd_catalog(args):
    for e in CATALOG.values():
        params = ", ".join(e.params) or "-"
        print(f"{e.name:<16} params: {params:<10} domain: {e.domain:<38} {e.summary}")
    print("identity         params: -          domain: -                                      the map z")
    return EXIT_OK


def cmd_coeffs(args):
    f = build_map(args.fn, args.order)
    if args.json:
        data = {"fn": args.fn, "order": f.order,
                "a": [[c.real, c.imag] for c in f.h.coeffs], "b": [[c.real, c.imag] for c in f.g.coeffs]}
        text = json.dumps(data)
        if args.out:
            args.out.write_text(text + "\n")
        else:
            print(text)
    else:
        _print_table(f, f.order)
    return EXIT_OK


def cmd_shear(args):
    from .fnspec import eval_number, parse_rational

    theta = float(np.real(eval_number(args.theta)))
    spec = ShearSpec.from_rational(parse_rational(args.phi), parse_rational(args.omega), theta, args.order)
    f = shear(spec, args.order)
    _print_table(f, f.order)
    n = f.order
    res_phi = np.max(np.abs((f.h + f.g * spec.epsilon).coeffs - spec.phi.truncate(n).coeffs))
    res_dil = np.max(np.abs((f.g.derivative() - spec.omega.truncate(n - 1) * f.h.derivative()).coeffs))
    print(f"# max |h + eps g - phi| = {res_phi:.3g}; max |g' - omega h'| = {res_dil:.3g}")
    return EXIT_OK


def _random_chain_report(args, tol: V.Tolerances) -> V.Report:
    from .shearing import random_rational_spec

    rng = np.random.default_rng(args.seed)
    worst, witness, items = math.inf, None, []
    for i in range(args.count):
        spec = random_rational_spec(rng, order=24)
        f = shear(spec, 24)
        sub = V.subordination_report(spec.omega, spec.epsilon, tol.subordination)
        err = max(abs(V.convolution_bn(spec.phi, spec.omega, spec.epsilon, n) - f.b(n)) / max(1.0, abs(f.b(n)))
                  for n in range(2, 21))
        margin = min(tol.coeff - err, sub.worst_margin + tol.subordination)
        items.append({"spec": i, "max_rel_error": err, "max_abs_subordination": 1 - sub.worst_margin})
        if margin < worst:
            worst, witness = margin, {"spec": i}
    return V.Report("proof_chain", worst >= 0, worst, witness, {"count": args.count, "seed": args.seed, "items": items})


def _slice_formula_report(args) -> V.Report:
    from .shearing import harmonic_koebe
    from .mapcore import slice as slice_series

    K = harmonic_koebe(max(args.order, 30))
    worst, witness = math.inf, None
    for theta in (0.0, math.pi / 4, math.pi / 2, math.pi):
        s = slice_series(K, complex(math.cos(theta), math.sin(theta)))
        for n in range(2, 31):
            err = abs(s.coeffs[n] - koebe_slice_coeff(theta, n))
            if 1e-10 - err < worst:
                worst, witness = 1e-10 - err, {"theta": theta, "n": n}
    return V.Report("koebe_slice_formula", worst >= 0, worst, witness, {"tolerance": 1e-10})


def _constants_report() -> V.Report:
    from fractions import Fraction

    got = V.specialized_constants(SHS_CONSTANTS)
    shown = {"growth_exponent": 3, "growth_denominator": 6, "jacobian_exponents": (3, 7),
             "derivative_exponents": (1, 4), "curvature_exponent": 4, "curvature_coefficient": 6}
    bad = {k: str(got[k]) for k, v in shown.items() if got[k] != (tuple(Fraction(x) for x in v) if isinstance(v, tuple) else v)}
    rho_err = abs(got["rho"] - (3 - 2 * math.sqrt(2)))
    ok = not bad and rho_err <= 1e-12
    return V.Report("specialization", ok, -rho_err if not bad else -1.0, bad or {"rho": got["rho"]},
                    {k: (str(v) if not isinstance(v, tuple) else [str(x) for x in v]) for k, v in got.items()})


def _alexander_report(args) -> V.Report:
    """Alexander transform of f_{a,lambda} against F_{a,lambda}, coefficient-wise."""
    from .mapcore import alexander
    from .shearing import F_a_lambda, catalog

    parsed = parse_function(args.fn)
    if isinstance(parsed, (ShearText, HarmonicText)) or parsed.name != "f_a_lambda":
        raise ValueError("verify alexander needs --fn f_a_lambda(a=..., lambda=...)")
    f = catalog(parsed, args.order)
    p = dict(parsed.params)
    lam = p.pop("lambda", p.pop("lam", None))
    F = F_a_lambda(p["a"], lam, args.order)
    T = alexander(f)
    n = min(T.order, F.order)
    err_h = np.abs(T.h.coeffs[: n + 1] - F.h.coeffs[: n + 1])
    err_g = np.abs(T.g.coeffs[: n + 1] - F.g.coeffs[: n + 1])
    tol = 1e-10
    k = int(np.argmax(np.maximum(err_h, err_g)))
    worst = tol - float(max(err_h.max(), err_g.max()))
    return V.Report("alexander", worst >= 0, worst, {"n": k}, {"order": n, "tolerance": tol,
                    "max_error_h": float(err_h.max()), "max_error_g": float(err_g.max())})


def cmd_verify(args):
    tol = _tolerances(args)
    grid = V.GridSpec(args.radii, args.angles, args.r_max)
    if args.check == "chain":
        return _emit(_random_chain_report(args, tol), args.out)
    if args.check == "slice":
        return _emit(_slice_formula_report(args), args.out)
    if args.check == "constants":
        return _emit(_constants_report(), args.out)
    if args.check == "alexander":
        return _emit(_alexander_report(args), args.out)
    f = build_map(args.fn, args.order)
    if args.check == "bounds":
        rep = V.check_coeff_bounds(f, min(args.order, f.order), args.cls, tol.coeff)
    elif args.check == "growth":
        rep = V.growth_check(f, grid, SHS_CONSTANTS, tol.pointwise)
    elif args.check == "jacobian":
        rep = V.jacobian_bounds_check(f, grid, SHS_CONSTANTS, tol.pointwise)
    elif args.check == "derivative":
        rep = V.derivative_bounds_check(f, grid, SHS_CONSTANTS, tol.pointwise)
    elif args.check == "curvature":
        radii = _parse_radii(args.curve_radii or "0.05,rho,0.3,0.6")
        rep = V.curvature_bounds_check(f, radii, args.curve_angles, SHS_CONSTANTS, tol.pointwise)
    else:
        rep = V.local_univalence_check(f, grid)
    return _emit(rep, args.out)


def cmd_curvature(args):
    f = build_map(args.fn, args.order)
    radii = _parse_radii(args.rs)
    rep = V.curvature_bounds_check(f, radii, args.curve_angles, SHS_CONSTANTS, args.pointwise_tol)
    for it in rep.details["items"]:
        print(f"r={it['r']:.9g}  curvature in [{it['min_curvature']:.9g}, {it['max_curvature']:.9g}]"
              f"  bounds [{it['lower']:.9g}, {it['upper']:.9g}]")
    return _emit(rep, args.out)


def cmd_radius(args):
    f = build_map(args.fn, args.order)
    r = V.radius_of_convexity(f, args.curve_angles, args.geometry_tol)
    print(f"radius of convexity ~ {r:.9g}  (class value 3-2sqrt2 = {SHS_CONSTANTS.rho:.9g})")
    if args.out:
        args.out.write_text(json.dumps({"schema": V.REPORT_SCHEMA, "fn": args.fn, "radius": r}) + "\n")
    return EXIT_OK


def cmd_theta_search(args):
    f = build_map(args.fn, max(args.order, args.coeff_order))
    rep = V.theta_search_report(f, args.grid, args.coeff_order, args.sample_r_max, args.samples,
                                _tolerances(args), args.jobs)
    surv = rep.details["survivors"]
    width = rep.details["cell_width"]
    for th in surv:
        print(f"theta = {_theta_label(th)}  ({th:.12g} rad, {math.degrees(th):.6g} deg, cell width {width:.6g})")
    if not surv:
        print("no surviving theta cell", file=sys.stderr)
    if args.out:
        args.out.write_text(rep.to_json(indent=2) + "\n")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_stability(args):
    f = build_map(args.fn, args.order)
    rep = V.stability_scan(f, args.lambdas, args.mode, V.FINE_GRID, args.sample_r_max, args.samples,
                           _tolerances(args), args.jobs)
    for lam in rep.details["survivors"]:
        print(f"lambda = {_fmt(lam)}  passes")
    return _emit(rep, args.out)


def cmd_render(args):
    f = build_map(args.fn, args.order)
    if args.slice_theta is not None:
        from .fnspec import eval_number

        theta = float(np.real(eval_number(args.slice_theta)))
        f = slice_map(f, complex(math.cos(theta), math.sin(theta)))
    spec = RenderSpec(rays=args.rays, circles=args.circles, samples_per_curve=args.samples_per_curve,
                      r_max=args.r_max, width=args.size, height=args.size)
    svg = render_grid(f, spec, title=args.fn)
    if args.out:
        args.out.write_text(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


COMMANDS = {
    "catalog": cmd_catalog, "coeffs": cmd_coeffs, "shear": cmd_shear, "verify": cmd_verify,
    "curvature": cmd_curvature, "radius": cmd_radius, "theta-search": cmd_theta_search,
    "stability": cmd_stability, "render": cmd_render,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        args = _resolve(args)
        return COMMANDS[args.command](args)
    except FunctionSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ShearError, SeriesError, RenderError, V.VerifyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
