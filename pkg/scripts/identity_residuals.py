"""Residuals of the divisor-sum transformation formulas over a set of (a, b) pairs.

    python3 scripts/identity_residuals.py --a 1 1.5707963267948966 3.141592653589793
"""

import argparse
import csv
import math
import sys
import time
from dataclasses import dataclass, field

from genbessel import (ModularPair, ToleranceConfig, check_eta_transformation,
                       check_generalized_eta, check_generalized_ramanujan_guinand,
                       check_ramanujan_guinand)


@dataclass
class Config:
    a_values: list = field(default_factory=lambda: [1.0, math.pi / 2, math.pi])
    orders: list = field(default_factory=lambda: [2.5, 3.0, 5.0])
    w_values: list = field(default_factory=lambda: [0.0, 0.25, 0.5, 1.0])
    rel_tol: float = 1e-7


def run(cfg: Config, out=sys.stdout):
    tol = ToleranceConfig(rel_tol=cfg.rel_tol)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["identity", "z", "w", "a", "lhs", "rhs", "rel_residual", "n_terms", "seconds"])

    def emit(name, z, w, pair, fn):
        t0 = time.perf_counter()
        rep = fn()
        writer.writerow([name, z, w, pair.a, repr(rep.lhs.real), repr(rep.rhs.real),
                         f"{rep.rel_residual:.2e}", rep.n_terms_lhs,
                         f"{time.perf_counter() - t0:.3f}"])

    for a in cfg.a_values:
        pair = ModularPair.from_a(a)
        emit("eta", "", 0.0, pair, lambda: check_eta_transformation(pair))
        for w in cfg.w_values:
            emit("generalized_eta", "", w, pair, lambda: check_generalized_eta(w, pair, tol))
        for z in cfg.orders:
            emit("ramanujan_guinand", z, 0.0, pair, lambda: check_ramanujan_guinand(z, pair, tol))
            for w in cfg.w_values[1:]:
                emit("generalized_ramanujan_guinand", z, w, pair,
                     lambda: check_generalized_ramanujan_guinand(z, w, pair, tol))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--a", type=float, nargs="+", default=Config().a_values)
    ap.add_argument("--z", type=float, nargs="+", default=Config().orders)
    ap.add_argument("--w", type=float, nargs="+", default=Config().w_values)
    ap.add_argument("--rel-tol", type=float, default=1e-7)
    a = ap.parse_args()
    run(Config(a.a, a.z, a.w, a.rel_tol))
