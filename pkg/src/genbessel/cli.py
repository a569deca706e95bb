"""Command-line front end.

    genbessel eval  TARGET --param VALUE ... [--tol T] [--output json|csv|plain]
    genbessel check TARGET --param VALUE ... [--tol T] [--output ...]
    genbessel sweep TARGET --param VALUE ... --grid-param START:STOP:STEP
    genbessel lemma --n N --x X [--tol T]

Complex values are single tokens: ``0.5`` or ``0.5+0.25i``.

Exit codes: 0 success, 1 bad arguments, 2 evaluation failure (or
non-converged result), 3 identity residual above tolerance.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from . import core, humbert, hypergeometric, identities, kzw, voigt
from .errors import ConvergenceError, GenBesselError
from .results import EvalResult, ToleranceConfig

EXIT_OK, EXIT_USAGE, EXIT_EVAL, EXIT_RESIDUAL = 0, 1, 2, 3
_EPS = 2.220446049250313e-16


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_complex(text: str) -> complex:
    s = text.strip().replace(" ", "")
    if s.endswith("i"):
        s = s[:-1] + "j"
    try:
        return complex(s)
    except ValueError:
        raise UsageError(f"cannot parse {text!r} as a number") from None


def parse_grid(text: str) -> list[float]:
    """``start:stop:step`` -> inclusive list of grid points."""
    try:
        start, stop, step = (float(p) for p in text.split(":"))
    except ValueError:
        raise UsageError(f"bad grid {text!r}; expected start:stop:step") from None
    if step == 0 or (stop - start) * step < 0:
        raise UsageError(f"grid {text!r} does not reach its endpoint")
    k = (stop - start) / step
    count = int(math.floor(k + 1e-12 * max(1.0, abs(k)))) + 1
    return [start + i * step for i in range(count)]


def _closed(v) -> EvalResult:
    v = complex(v)
    return EvalResult(v, _EPS * abs(v), 1, True)


def _pair(p) -> identities.ModularPair:
    a, b = p.get("a"), p.get("b")
    if a is None and b is None:
        raise UsageError("need --a (and optionally --b)")
    if a is None:
        a = identities.PI2 / b.real
    a = complex(a).real
    if b is not None:
        b = complex(b).real
        if abs(a * b - identities.PI2) > 1e-6 * identities.PI2:
            raise UsageError(f"a*b = {a * b} is not pi^2")
        if abs(a * b - identities.PI2) > 1e-14 * identities.PI2:
            print(f"note: using b = pi^2/a = {identities.PI2 / a!r}", file=sys.stderr)
    return identities.ModularPair.from_a(a)


def _real(v: complex, name: str) -> float:
    if v.imag != 0:
        raise UsageError(f"--{name} must be real")
    return v.real


# target -> (required params, evaluator(params, tol) -> EvalResult)
EVAL_TARGETS = {
    "kzw_contour": (("z", "w", "x"),
                    lambda p, t: kzw.kzw_contour(p["z"], p["w"], p["x"], tol=t)),
    "khalf_series": (("w", "x"), lambda p, t: kzw.khalf_series(p["w"], p["x"], t)),
    "kzw_asymptotic": (("z", "w", "x"),
                       lambda p, t: _closed(kzw.kzw_asymptotic(p["z"], p["w"], p["x"]))),
    "phi3": (("a", "c", "x", "y"),
             lambda p, t: humbert.phi3(p["a"], p["c"], p["x"], p["y"], t)),
    "hyp1f1": (("a", "c", "z"), lambda p, t: hypergeometric.hyp1f1(p["a"], p["c"], p["z"], t)),
    "hyp2f2": (("a1", "a2", "c1", "c2", "z"),
               lambda p, t: hypergeometric.hyp2f2(p["a1"], p["a2"], p["c1"], p["c2"], p["z"], t)),
    "voigt_profile": (("sigma", "beta", "x"), lambda p, t: _closed(voigt.voigt_profile(
        _real(p["x"], "x"), voigt.VoigtParams(_real(p["sigma"], "sigma"), _real(p["beta"], "beta"))))),
    "voigt_cdf": (("sigma", "beta", "x0"), lambda p, t: voigt.voigt_cdf_result(
        _real(p["x0"], "x0"), voigt.VoigtParams(_real(p["sigma"], "sigma"), _real(p["beta"], "beta")), t)),
    "faddeeva": (("y",), lambda p, t: _closed(voigt.faddeeva(p["y"]))),
    "zeta": (("s",), lambda p, t: _closed(core.zeta(p["s"]))),
    "erf": (("w",), lambda p, t: _closed(core.erf(p["w"]))),
    "erfi": (("w",), lambda p, t: _closed(core.erfi(p["w"]))),
    "laguerre": (("n", "alpha", "x"), lambda p, t: _closed(
        humbert.laguerre(_int(p["n"], "n"), p["alpha"], p["x"], t))),
}


def _int(v: complex, name: str) -> int:
    r = _real(v, name)
    if r != int(r):
        raise UsageError(f"--{name} must be an integer")
    return int(r)


CHECK_TARGETS = {
    "ramanujan_guinand": (("z",), lambda p, t: identities.check_ramanujan_guinand(
        p["z"], _pair(p), t)),
    "generalized_ramanujan_guinand": (("z", "w"), lambda p, t:
        identities.check_generalized_ramanujan_guinand(p["z"], p["w"], _pair(p), t)),
    "eta": ((), lambda p, t: identities.check_eta_transformation(_pair(p), t)),
    "generalized_eta": (("w",), lambda p, t: identities.check_generalized_eta(
        _real(p["w"], "w"), _pair(p), t)),
    "lemma21": (("n", "x"), lambda p, t: kzw.inverse_mellin_lemma(_int(p["n"], "n"), p["x"], tol=t)),
    "theorem12": (("w", "x"), lambda p, t: identities.check_contour_vs_series(p["w"], p["x"], t)),
}

PARAM_NAMES = ("z", "w", "x", "y", "a", "b", "c", "a1", "a2", "c1", "c2",
               "s", "n", "alpha", "sigma", "beta", "x0")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="genbessel", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(p, default_tol):
        for name in PARAM_NAMES:
            p.add_argument(f"--{name}", metavar="V")
        p.add_argument("--tol", type=float, default=default_tol)
        p.add_argument("--output", choices=("json", "csv", "plain"), default="plain")

    p_eval = sub.add_parser("eval", help="evaluate one function")
    p_eval.add_argument("target", choices=sorted(EVAL_TARGETS))
    common(p_eval, 1e-10)
    p_check = sub.add_parser("check", help="verify an identity")
    p_check.add_argument("target", choices=sorted(CHECK_TARGETS))
    common(p_check, 1e-8)
    p_sweep = sub.add_parser("sweep", help="tabulate a function over a grid (CSV)")
    p_sweep.add_argument("target", choices=sorted(EVAL_TARGETS))
    common(p_sweep, 1e-10)
    p_lemma = sub.add_parser("lemma", help="inverse Mellin lemma check (same as check lemma21)")
    common(p_lemma, 1e-8)
    return parser


def _collect(args, required) -> dict:
    params = {}
    for name in PARAM_NAMES:
        raw = getattr(args, name)
        if raw is not None:
            params[name] = raw
    missing = [r for r in required if r not in params]
    if missing:
        raise UsageError("missing parameter(s): " + ", ".join("--" + m for m in missing))
    return params


def _emit_eval(res: EvalResult, target: str, params: dict, output: str, out):
    if output == "json":
        doc = {"target": target,
               "params": {k: {"re": v.real, "im": v.imag} for k, v in params.items()}}
        doc.update(res.to_dict())
        out.write(json.dumps(doc) + "\n")
    elif output == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["value_re", "value_im", "abs_err", "terms", "converged"])
        w.writerow([repr(res.value.real), repr(res.value.imag), repr(res.abs_err),
                    res.terms_used, res.converged])
    else:
        out.write(f"value = {res.value.real!r} {res.value.imag:+.17g}i\n"
                  f"abs_err = {res.abs_err!r}\nterms_used = {res.terms_used}\n"
                  f"converged = {res.converged}\n")


def _emit_report(rep, output: str, out):
    if output == "json":
        out.write(json.dumps(rep.to_dict()) + "\n")
    elif output == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_residual",
                    "rel_residual", "n_terms_lhs", "pass"])
        w.writerow([repr(rep.lhs.real), repr(rep.lhs.imag), repr(rep.rhs.real),
                    repr(rep.rhs.imag), repr(rep.abs_residual), repr(rep.rel_residual),
                    rep.n_terms_lhs, rep.passed])
    else:
        out.write(f"lhs = {rep.lhs.real!r} {rep.lhs.imag:+.17g}i\n"
                  f"rhs = {rep.rhs.real!r} {rep.rhs.imag:+.17g}i\n"
                  f"abs_residual = {rep.abs_residual!r}\nrel_residual = {rep.rel_residual!r}\n"
                  f"n_terms_lhs = {rep.n_terms_lhs}\npass = {rep.passed}\n")


def run_eval(args, out) -> int:
    required, fn = EVAL_TARGETS[args.target]
    params = {k: parse_complex(v) for k, v in _collect(args, required).items()}
    tol = ToleranceConfig.from_env(rel_tol=args.tol)
    try:
        res = fn(params, tol)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.partial is not None:
            _emit_eval(exc.partial, args.target, params, args.output, out)
        return EXIT_EVAL
    except GenBesselError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    _emit_eval(res, args.target, params, args.output, out)
    return EXIT_OK if res.converged else EXIT_EVAL


def run_check(args, out, target=None) -> int:
    target = target or args.target
    required, fn = CHECK_TARGETS[target]
    params = {k: parse_complex(v) for k, v in _collect(args, required).items()}
    tol = ToleranceConfig.from_env(rel_tol=args.tol)
    try:
        rep = fn(params, tol)
    except GenBesselError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    _emit_report(rep, args.output, out)
    return EXIT_OK if rep.passed else EXIT_RESIDUAL


def run_sweep(args, out) -> int:
    required, fn = EVAL_TARGETS[args.target]
    raw = _collect(args, required)
    grids = [k for k, v in raw.items() if ":" in v]
    if len(grids) != 1:
        raise UsageError("sweep needs exactly one parameter given as start:stop:step")
    var = grids[0]
    points = parse_grid(raw[var])
    fixed = {k: parse_complex(v) for k, v in raw.items() if k != var}
    tol = ToleranceConfig.from_env(rel_tol=args.tol)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["param", "value_re", "value_im", "abs_err", "terms"])
    status = EXIT_OK
    for value in points:
        try:
            res = fn({**fixed, var: complex(value)}, tol)
            w.writerow([repr(value), repr(res.value.real), repr(res.value.imag),
                        repr(res.abs_err), res.terms_used])
            if not res.converged:
                status = EXIT_EVAL
        except GenBesselError as exc:
            print(f"error at {var}={value!r}: {exc}", file=sys.stderr)
            w.writerow([repr(value), "NaN", "NaN", "NaN", "NaN"])
            status = EXIT_EVAL
    return status


def _attach_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ``--x -5:5:1`` as ``--x=-5:5:1``.

    argparse only recognizes plain negative numbers as option values; grids
    and complex literals with a leading minus would be taken for flags.
    """
    out, i = [], 0
    options = {f"--{n}" for n in PARAM_NAMES}
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if tok in options and len(nxt) > 1 and nxt[0] == "-" and (nxt[1].isdigit() or nxt[1] in ".i"):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_attach_negative_values(argv))
    except SystemExit as exc:  # usage errors (exit 1) and --help (exit 0)
        return int(exc.code or 0)
    try:
        if args.verb == "eval":
            return run_eval(args, out)
        if args.verb == "check":
            return run_check(args, out)
        if args.verb == "sweep":
            return run_sweep(args, out)
        return run_check(args, out, target="lemma21")
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"genbessel: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
