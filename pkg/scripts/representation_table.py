"""Tabulate K_{1/2,w}(x) from the contour integral and the Phi3 series side by side.

    python3 scripts/representation_table.py --w 0 0.3 0.6 1.0 --x 0.5 1 2 5 > table.csv
"""

import argparse
import csv
import sys
import time
from dataclasses import dataclass, field

from genbessel import ContourSpec, ToleranceConfig, khalf_series, kzw_contour


@dataclass
class Config:
    w_values: list = field(default_factory=lambda: [0.0, 0.3, 0.6, 1.0])
    x_values: list = field(default_factory=lambda: [0.5, 1.0, 2.0, 5.0])
    rel_tol: float = 1e-12
    duplication: bool = False


def run(cfg: Config, out=sys.stdout):
    tol = ToleranceConfig(rel_tol=cfg.rel_tol)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["w", "x", "contour", "contour_err", "t_max", "series", "series_terms",
                     "rel_diff", "seconds"])
    for w in cfg.w_values:
        for x in cfg.x_values:
            t0 = time.perf_counter()
            c = kzw_contour(0.5, w, x, ContourSpec(), tol, duplication=cfg.duplication)
            s = khalf_series(w, x, tol)
            dt = time.perf_counter() - t0
            diff = abs(c.value - s.value) / max(1.0, abs(s.value))
            writer.writerow([w, x, repr(c.value.real), f"{c.abs_err:.2e}",
                             c.diagnostics["t_max_used"], repr(s.value.real), s.terms_used,
                             f"{diff:.2e}", f"{dt:.3f}"])


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--w", type=float, nargs="+", default=Config().w_values)
    ap.add_argument("--x", type=float, nargs="+", default=Config().x_values)
    ap.add_argument("--rel-tol", type=float, default=1e-12)
    ap.add_argument("--duplication", action="store_true",
                    help="integrate the collapsed single-Gamma integrand")
    a = ap.parse_args()
    run(Config(a.w, a.x, a.rel_tol, a.duplication))
