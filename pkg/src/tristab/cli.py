"""Command-line interface.

Every operation of the library is reachable through a subcommand.  All
numeric inputs are flags (never positional): the four sign cases make
positional defaults too easy to get wrong.  Signs accept +1/-1 or the
letters f/d.  Output is deterministic for identical argv except for the
trailing timing line, which --no-timing suppresses.

Exit codes: 0 success, 1 numeric failure (no standing wave, off the curve,
diverging integral where a finite answer was requested), 2 argument errors.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from . import boundary, diagram, verify
from .asymptotics import Direction, asymptotic_exponent, classify_limit, \
    sign_guarantees
from .errors import DivergingIntegral, NoStandingWave, NotOnCurve, \
    UnsupportedRegime
from .model import NonlinearityParams, normalize
from .profile import find_a
from .stability import eval_J, eval_J0, eval_J_mass_fd, eval_J_raw

_NUMERIC_ERRORS = (NoStandingWave, NotOnCurve, DivergingIntegral,
                   UnsupportedRegime, ValueError)


@dataclass
class RunConfig:
    """Parsed invocation: subcommand plus every shared numeric knob.

    Construction validates the exponent ordering, so a RunConfig in hand
    means the triple is safe to dispatch on.
    """

    subcommand: str
    p: float = math.nan
    q: float = math.nan
    r: float = math.nan
    sign1: int = 1
    sign3: int = 1
    omega: Optional[float] = None
    gamma: Optional[float] = None
    omega_range: Optional[Tuple[float, float]] = None
    gamma_range: Optional[Tuple[float, float]] = None
    nx: int = 200
    ny: int = 200
    levels: List[float] = field(default_factory=lambda: [0.0])
    out_grid: Optional[str] = None
    out_contours: Optional[str] = None
    out: Optional[str] = None
    jobs: Optional[int] = None
    rel_tol: float = 1e-9
    no_timing: bool = False

    def __post_init__(self):
        if not math.isnan(self.p):
            if not (1.0 < self.p < self.q < self.r):
                raise ValueError("exponents must satisfy 1 < p < q < r")

    def params(self) -> NonlinearityParams:
        return NonlinearityParams(self.p, self.q, self.r,
                                  self.sign1, self.sign3)


def _sign(text: str) -> int:
    t = text.strip().lower()
    if t in ("+1", "1", "f"):
        return 1
    if t in ("-1", "d"):
        return -1
    raise argparse.ArgumentTypeError(
        "sign must be +1, -1, f, or d (got %r)" % text)


def _levels_arg(text: str) -> List[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError("levels must be comma-separated reals")


def _fmt(v: float) -> str:
    if math.isnan(v):
        return "NaN"
    if v == math.inf:
        return "+Inf"
    if v == -math.inf:
        return "-Inf"
    return "%.12g" % v


def _add_exponents(sp, signs: bool = True) -> None:
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--q", type=float, required=True)
    sp.add_argument("--r", type=float, required=True)
    if signs:
        sp.add_argument("--s1", type=_sign, required=True,
                        help="sign of the lowest power: +1/f or -1/d")
        sp.add_argument("--s3", type=_sign, required=True,
                        help="sign of the highest power: +1/f or -1/d")
    sp.add_argument("--no-timing", action="store_true",
                    help="suppress the trailing elapsed-time line")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tristab",
        description="Standing-wave existence and stability for the triple-"
                    "power NLS: nonexistence curve, slope functional J, "
                    "limits, and stability diagrams.")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("classify", help="case label and curve endpoints")
    _add_exponents(sp)

    sp = sub.add_parser("normalize",
                        help="reduce raw coefficients to the two-sign form")
    sp.add_argument("--a1", type=float, required=True)
    sp.add_argument("--a2", type=float, required=True)
    sp.add_argument("--a3", type=float, required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--q", type=float, required=True)
    sp.add_argument("--r", type=float, required=True)
    sp.add_argument("--no-timing", action="store_true")

    sp = sub.add_parser("profile-a", help="first zero a(omega, gamma)")
    _add_exponents(sp)
    sp.add_argument("--omega", type=float, required=True)
    sp.add_argument("--gamma", type=float, required=True)

    sp = sub.add_parser("curve-ne", help="sample the nonexistence curve")
    _add_exponents(sp)
    sp.add_argument("--n", type=int, default=200)
    sp.add_argument("--a-min", type=float, default=None)
    sp.add_argument("--a-max", type=float, default=None)
    sp.add_argument("--out", default=None,
                    help="CSV destination (stdout when omitted)")

    sp = sub.add_parser("omega-star", help="curve frequency omega*(gamma)")
    _add_exponents(sp)
    sp.add_argument("--gamma", type=float, required=True)

    sp = sub.add_parser("eval-j", help="J by all three methods")
    _add_exponents(sp)
    sp.add_argument("--omega", type=float, required=True)
    sp.add_argument("--gamma", type=float, required=True)
    sp.add_argument("--rel-tol", type=float, default=1e-9)

    sp = sub.add_parser("eval-j0", help="J(0, gamma) for D* cases, p < 7/3")
    _add_exponents(sp)
    sp.add_argument("--gamma", type=float, required=True)

    sp = sub.add_parser("limits", help="limit classification, all directions")
    _add_exponents(sp)
    sp.add_argument("--omega", type=float, required=True,
                    help="fixed omega for the gamma directions")
    sp.add_argument("--gamma", type=float, required=True,
                    help="fixed gamma for the omega directions")

    sp = sub.add_parser("guarantees", help="guaranteed-sign statements")
    _add_exponents(sp)

    sp = sub.add_parser("diagram", help="sweep J and extract level curves")
    _add_exponents(sp)
    sp.add_argument("--omega-min", type=float, required=True)
    sp.add_argument("--omega-max", type=float, required=True)
    sp.add_argument("--gamma-min", type=float, required=True)
    sp.add_argument("--gamma-max", type=float, required=True)
    sp.add_argument("--nx", type=int, default=200)
    sp.add_argument("--ny", type=int, default=200)
    sp.add_argument("--levels", type=_levels_arg, default=[0.0])
    sp.add_argument("--out-grid", default="diagram_grid.csv")
    sp.add_argument("--out-contours", default="diagram_contours.json")
    sp.add_argument("--jobs", type=int, default=None,
                    help="worker processes (default: available parallelism)")

    sp = sub.add_parser("verify", help="run the numeric verification suites")
    sp.add_argument("--suite", default="all",
                    choices=list(verify.SUITES) + ["all"])
    sp.add_argument("--seed", type=int, default=20260819)
    sp.add_argument("--no-timing", action="store_true")

    return ap


_CFG_FIELDS = (("p", "p"), ("q", "q"), ("r", "r"), ("s1", "sign1"),
               ("s3", "sign3"), ("omega", "omega"), ("gamma", "gamma"),
               ("nx", "nx"), ("ny", "ny"), ("levels", "levels"),
               ("out_grid", "out_grid"), ("out_contours", "out_contours"),
               ("out", "out"), ("jobs", "jobs"), ("rel_tol", "rel_tol"),
               ("no_timing", "no_timing"))


def _config_from(ns, ap) -> RunConfig:
    kw = {"subcommand": ns.subcommand}
    for src, dst in _CFG_FIELDS:
        if hasattr(ns, src):
            kw[dst] = getattr(ns, src)
    if hasattr(ns, "omega_min"):
        kw["omega_range"] = (ns.omega_min, ns.omega_max)
        kw["gamma_range"] = (ns.gamma_min, ns.gamma_max)
        kw.pop("omega", None)
        kw.pop("gamma", None)
    try:
        return RunConfig(**kw)
    except ValueError as exc:
        ap.error(str(exc))


def _cmd_classify(cfg: RunConfig, ns) -> int:
    params = cfg.params()
    endpoint_a, gamma1, rng = boundary.endpoints(params)
    print("case: %s" % params.case)
    print("curve a-range: %s" % rng)
    if endpoint_a is not None:
        label = "a_sharp" if params.case == "FF" else "a_b"
        om, _ = boundary.gamma_omega_ne(params, endpoint_a)
        print("%s: %s" % (label, _fmt(endpoint_a)))
        print("gamma_1: %s" % _fmt(gamma1))
        print("omega_ne(%s): %s" % (label, _fmt(om)))
    return 0


def _cmd_normalize(cfg: RunConfig, ns) -> int:
    red = normalize(ns.a1, ns.a2, ns.a3, cfg.p, cfg.q, cfg.r)
    print("kappa: %s" % _fmt(red.kappa))
    print("lambda: %s" % _fmt(red.lam))
    print("gamma: %s" % _fmt(red.gamma))
    print("case: %s" % red.normalized.case)
    return 0


def _cmd_profile_a(cfg: RunConfig, ns) -> int:
    params = cfg.params()
    res = find_a(params, cfg.omega, cfg.gamma)
    if res is None:
        print("no standing wave at omega=%s, gamma=%s"
              % (_fmt(cfg.omega), _fmt(cfg.gamma)), file=sys.stderr)
        return 1
    print("a: %s" % _fmt(res.a))
    print("uprime_at_a: %s" % _fmt(res.uprime_at_a))
    print("exists: %s" % res.exists)
    print("on_boundary: %s" % res.on_boundary)
    return 0


def _cmd_curve_ne(cfg: RunConfig, ns) -> int:
    params = cfg.params()
    curve = boundary.sample_curve(params, n=ns.n, a_min=ns.a_min,
                                  a_max=ns.a_max)
    if cfg.out is not None:
        diagram.export_curve_csv(curve, cfg.out)
        print("wrote %d samples to %s" % (len(curve.samples), cfg.out))
        return 0
    print("a,omega_ne,gamma_ne")
    for a, om, ga in curve.samples:
        print("%s,%s,%s" % (_fmt(a), _fmt(om), _fmt(ga)))
    return 0


def _cmd_omega_star(cfg: RunConfig, ns) -> int:
    ws = boundary.omega_star(cfg.params(), cfg.gamma)
    print("omega_star: %s" % _fmt(ws))
    return 0


def _cmd_eval_j(cfg: RunConfig, ns) -> int:
    params = cfg.params()
    # evaluate everything before printing so a failed existence check
    # does not leave a dangling table header on stdout
    rows = []
    for name, fn in (
            ("transformed",
             lambda: eval_J(params, cfg.omega, cfg.gamma, rel_tol=cfg.rel_tol)),
            ("raw",
             lambda: eval_J_raw(params, cfg.omega, cfg.gamma,
                                rel_tol=cfg.rel_tol)),
            ("mass_fd", lambda: eval_J_mass_fd(params, cfg.omega, cfg.gamma))):
        v = fn()
        rows.append("%-12s %-20s %-16s %s"
                    % (name, _fmt(v.j), _fmt(v.abs_error), v.verdict()))
    print("method       j                    abs_error        verdict")
    for row in rows:
        print(row)
    return 0


def _cmd_eval_j0(cfg: RunConfig, ns) -> int:
    v = eval_J0(cfg.params(), cfg.gamma)
    print("j0: %s" % _fmt(v.j))
    print("abs_error: %s" % _fmt(v.abs_error))
    print("verdict: %s" % v.verdict())
    return 0


_DIRECTION_LABELS = (
    (Direction.OmegaToZero, "omega->0", "gamma"),
    (Direction.OmegaToInf, "omega->inf", "gamma"),
    (Direction.GammaToInf, "gamma->+inf", "omega"),
    (Direction.GammaToNegInf, "gamma->-inf", "omega"),
)


def _cmd_limits(cfg: RunConfig, ns) -> int:
    params = cfg.params()
    for direction, label, which in _DIRECTION_LABELS:
        value = cfg.gamma if which == "gamma" else cfg.omega
        try:
            lc = classify_limit(params, direction, value)
        except _NUMERIC_ERRORS as exc:
            print("%-12s unsupported (%s)" % (label, exc))
            continue
        expo = asymptotic_exponent(params, direction, gamma=cfg.gamma)
        tail = "  [J ~ a^%s]" % _fmt(expo) if expo is not None else ""
        print("%-12s %s (%s)%s" % (label, lc.kind.value, lc.detail, tail))
    return 0


def _cmd_guarantees(cfg: RunConfig, ns) -> int:
    out = sign_guarantees(cfg.params())
    if not out:
        print("none")
        return 0
    for g in out:
        print("%s: %s" % (g.statement.value, g.region))
    return 0


def _cmd_diagram(cfg: RunConfig, ns) -> int:
    params = cfg.params()
    grid = diagram.sweep_grid(params, cfg.omega_range, cfg.gamma_range,
                              cfg.nx, cfg.ny, jobs=cfg.jobs)
    vals = grid.values
    n_nan = int((vals != vals).sum())
    n_div = int((vals == math.inf).sum() + (vals == -math.inf).sum())
    print("grid: %d x %d (%d nonexistent, %d divergent)"
          % (cfg.nx, cfg.ny, n_nan, n_div))
    diagram.export_grid_csv(grid, cfg.out_grid)
    print("wrote grid to %s" % cfg.out_grid)
    contours = diagram.extract_contours(grid, cfg.levels)
    diagram.export_contours_json(contours, cfg.out_contours)
    for cs in contours:
        npts = sum(len(path) for path in cs.paths)
        print("level %s: %d paths, %d points"
              % (_fmt(cs.level), len(cs.paths), npts))
    print("wrote contours to %s" % cfg.out_contours)
    return 0


def _cmd_verify(cfg: RunConfig, ns) -> int:
    failures = verify.run_suite(ns.suite, seed=ns.seed)
    return 1 if failures else 0


_COMMANDS = {
    "classify": _cmd_classify,
    "normalize": _cmd_normalize,
    "profile-a": _cmd_profile_a,
    "curve-ne": _cmd_curve_ne,
    "omega-star": _cmd_omega_star,
    "eval-j": _cmd_eval_j,
    "eval-j0": _cmd_eval_j0,
    "limits": _cmd_limits,
    "guarantees": _cmd_guarantees,
    "diagram": _cmd_diagram,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    cfg = _config_from(ns, ap)
    start = time.perf_counter()
    try:
        code = _COMMANDS[cfg.subcommand](cfg, ns)
    except _NUMERIC_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    if not cfg.no_timing:
        print("# elapsed %.3f s" % (time.perf_counter() - start))
    return code


if __name__ == "__main__":
    sys.exit(main())
