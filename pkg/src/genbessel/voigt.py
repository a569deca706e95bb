"""Voigt line shape: Faddeeva function, profile density and its CDF.

With w = (x + i beta) / (sqrt(2) sigma), the profile is Re xi(w) / (sigma sqrt(2 pi))
and the CDF is

    F(x0) = Re[1/2 + erf(w)/2 + (i w^2 / pi) 2F2(1, 1; 3/2, 2; -w^2)].

The 2F2 term is summed directly for |w| <= 3.  Past that the alternating
series cancels too badly in double precision, so the term is taken from
its antiderivative form instead: (i w^2/pi) 2F2(1,1;3/2,2;-w^2) equals
(2i/pi) times the integral of Dawson's function from 0 to w.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
import scipy.special as sc

from .core import erf
from .hypergeometric import hyp2f2
from .quadrature import QuadResult, integrate_panels
from .results import DEFAULT_TOL, EvalResult, ToleranceConfig, as_complex, as_real

DIRECT_2F2_MAX_W = 3.0
FADDEEVA_FORMULA_MAX = 5.0
_SQRT_2PI = math.sqrt(2 * math.pi)


@dataclass(frozen=True)
class VoigtParams:
    sigma: float    # Gaussian width
    beta: float     # Lorentzian half width

    def __post_init__(self):
        if not (self.sigma > 0 and self.beta > 0):
            raise ValueError(f"sigma and beta must be positive, got {self.sigma}, {self.beta}")

    def scaled(self, x: float) -> complex:
        return (x + 1j * self.beta) / (math.sqrt(2) * self.sigma)


def faddeeva(y) -> complex:
    """xi(y) = exp(-y^2) (1 - erf(-i y)).

    The formula is used as written for |y| <= 5.  Beyond that exp(-y^2)
    and erf(-iy) over/underflow separately, and scipy's ``wofz`` (the same
    function, evaluated without the split) takes over.
    """
    y = as_complex(y, "y")
    if abs(y) <= FADDEEVA_FORMULA_MAX:
        return cmath.exp(-y * y) * (1 - erf(-1j * y))
    return complex(sc.wofz(y))


def voigt_profile(x, p: VoigtParams) -> float:
    """Voigt density V(x; sigma, beta)."""
    x = as_real(x, "x")
    return faddeeva(p.scaled(x)).real / (p.sigma * _SQRT_2PI)


def _dawson_integral(w: complex) -> QuadResult:
    """int_0^w D(t) dt along the straight segment, D = Dawson's function."""
    aw = abs(w)
    knee = min(1.0, 4.0 / aw)
    # D(t) ~ 1/(2t) past |t| ~ 4: grade the panels geometrically there.
    edges = np.unique(np.concatenate([np.linspace(0.0, knee, 9),
                                      np.geomspace(knee, 1.0, 16)]))
    return integrate_panels(lambda u: w * sc.dawsn(w * u), edges, 1e-15)


def cdf_2f2_term(w, tol: ToleranceConfig = DEFAULT_TOL):
    """(i w^2 / pi) 2F2(1,1;3/2,2;-w^2).

    Returns ``(value, abs_err, branch)`` with branch ``"2f2"`` or ``"dawson"``.
    """
    w = as_complex(w, "w")
    if abs(w) <= DIRECT_2F2_MAX_W:
        f = hyp2f2(1, 1, 1.5, 2, -w * w, tol)
        scale = abs(w * w) / math.pi
        return 1j * w * w / math.pi * f.value, scale * f.abs_err, "2f2"
    q = _dawson_integral(w)
    return 2j / math.pi * q.value, 2 / math.pi * q.abs_err, "dawson"


def voigt_cdf_result(x0, p: VoigtParams, tol: ToleranceConfig = DEFAULT_TOL) -> EvalResult:
    """CDF with diagnostics: ``unclamped`` value and the 2F2 ``branch``."""
    x0 = as_real(x0, "x0")
    w = p.scaled(x0)
    term, err, branch = cdf_2f2_term(w, tol)
    raw = (0.5 + erf(w) / 2 + term).real
    value = min(1.0, max(0.0, raw))
    return EvalResult(complex(value), float(err), 0, True,
                      {"unclamped": raw, "branch": branch})


def voigt_cdf(x0, p: VoigtParams, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Cumulative distribution of the Voigt profile, clamped to [0, 1]."""
    return voigt_cdf_result(x0, p, tol).value.real
