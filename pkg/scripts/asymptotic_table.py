"""Deviation of the large-x expansion from the Phi3 series at order 1/2.

Both normalizations are reported: by |K| itself and by the envelope
sqrt(pi/2x) e^{-x}.  The first is inflated wherever the oscillating
bracket cos(w sqrt(2x)) P - sin(w sqrt(2x)) Q + e^{-w^2/4} R nearly cancels.

    python3 scripts/asymptotic_table.py --w 0.25 0.5 --x 25 50 100 200
"""

import argparse
import cmath
import csv
import sys
from dataclasses import dataclass, field

from genbessel import k_half_closed, khalf_series, kzw_asymptotic


@dataclass
class Config:
    w_values: list = field(default_factory=lambda: [0.25, 0.5])
    x_values: list = field(default_factory=lambda: [25.0, 50.0, 100.0, 200.0])


def run(cfg: Config, out=sys.stdout):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["w", "x", "series", "asymptotic", "dev_over_value", "dev_over_envelope",
                     "bracket_over_2"])
    for w in cfg.w_values:
        for x in cfg.x_values:
            s = khalf_series(w, x).value
            a = kzw_asymptotic(0.5, w, x)
            env = abs(k_half_closed(x))
            bracket = (cmath.cos(w * (2 * x) ** 0.5) + cmath.exp(-w * w / 4)).real / 2
            writer.writerow([w, x, repr(s.real), repr(a.real), f"{abs(a - s) / abs(s):.3e}",
                             f"{abs(a - s) / env:.3e}", f"{bracket:.3f}"])


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--w", type=float, nargs="+", default=Config().w_values)
    ap.add_argument("--x", type=float, nargs="+", default=Config().x_values)
    a = ap.parse_args()
    run(Config(a.w, a.x))
