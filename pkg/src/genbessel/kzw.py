"""The generalized modified Bessel function K_{z,w}(x).

Representations:

* :func:`kzw_contour` -- the defining Mellin-Barnes integral along Re(s) = c,
  valid for any order z and deformation w.
* :func:`khalf_series` -- a series of Humbert Phi3 functions, order 1/2 only.
* :func:`k_half_closed` -- the elementary K_{1/2}(x), i.e. w = 0.
* :func:`kzw_asymptotic` -- leading large-|x| behaviour in |arg x| < pi/4.

:func:`inverse_mellin_lemma` checks the inverse Mellin transform that
underlies the series representation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import loggamma, rgamma
from .errors import ContourError, ConvergenceError, DomainError, ParameterError
from .humbert import phi3
from .hypergeometric import hyp1f1, hyp1f1_array
from .quadrature import integrate_panels
from .results import (DEFAULT_TOL, EvalResult, IdentityReport, ToleranceConfig,
                      as_complex)

_EPS = np.finfo(float).eps
_LOG2 = math.log(2.0)
_SQRT_HALF_PI = math.sqrt(math.pi / 2)

T_START = 16.0
PANEL_WIDTH = 2.0
KHALF_R_CAP = 64


@dataclass(frozen=True)
class ContourSpec:
    """Vertical line Re(s) = ``abscissa_c`` truncated at |Im s| <= ``t_max``.

    ``abscissa_c=None`` picks |Re z| + 3/4 for K_{z,w} and 3/4 for the
    inverse Mellin lemma.  The truncation height starts at 16 and doubles
    until the added strips change the integral by less than
    ``quad_rel_tol``; ``t_max`` caps that growth.
    """

    abscissa_c: float | None = None
    t_max: float = 200.0
    quad_rel_tol: float = 1e-12
    max_panels: int = 4000


DEFAULT_CONTOUR = ContourSpec()


@dataclass(frozen=True)
class KzwPoint:
    z: complex
    w: complex
    x: complex

    def __post_init__(self):
        object.__setattr__(self, "z", as_complex(self.z, "z"))
        object.__setattr__(self, "w", as_complex(self.w, "w"))
        object.__setattr__(self, "x", _check_cut(self.x))


def _check_cut(x) -> complex:
    x = as_complex(x, "x")
    if x.imag == 0 and x.real <= 0:
        raise DomainError(f"x={x} lies on the branch cut (-inf, 0]")
    return x


def _line_integral(integrand, c: float, spec: ContourSpec, tol: ToleranceConfig) -> EvalResult:
    """(1/2 pi i) * integral of integrand(s) ds over Re(s) = c, i.e. (1/2 pi) int f(c+it) dt."""
    t_cap = min(spec.t_max, tol.max_contour_height)
    t_cur = min(T_START, t_cap)

    def f(t):
        return integrand(c + 1j * t)

    def strip(lo, hi, abs_tol):
        n = max(1, int(round((hi - lo) / PANEL_WIDTH)))
        res = integrate_panels(f, np.linspace(lo, hi, n + 1), abs_tol,
                               max_panels=spec.max_panels)
        if not res.converged:
            raise ContourError(f"panel cap {spec.max_panels} reached on [{lo}, {hi}]")
        return res

    # Pilot pass sets the absolute target: relative to the value, floored at
    # the roundoff level of the oscillatory integrand.
    pilot = strip(-t_cur, t_cur, math.inf)
    target = max(spec.quad_rel_tol * abs(pilot.value), 8 * _EPS * pilot.l1_norm)
    core = strip(-t_cur, t_cur, target)
    value, err, l1 = core.value, core.abs_err, core.l1_norm
    n_evals = pilot.n_evals + core.n_evals
    while True:
        t_new = min(2 * t_cur, t_cap)
        if t_new <= t_cur:
            partial = EvalResult(value / (2 * math.pi), err / (2 * math.pi), n_evals, False)
            raise ContourError(
                f"contour tail not below tolerance at height {t_cap}", partial)
        upper = strip(t_cur, t_new, target / 2)
        lower = strip(-t_new, -t_cur, target / 2)
        delta = upper.value + lower.value
        value += delta
        err += upper.abs_err + lower.abs_err
        l1 += upper.l1_norm + lower.l1_norm
        n_evals += upper.n_evals + lower.n_evals
        t_cur = t_new
        tail_tol = max(spec.quad_rel_tol * abs(value), 8 * _EPS * l1)
        if abs(delta) <= tail_tol:
            break
    # The next strip is smaller still (Gamma decay ~ e^{-pi |t| / 2}), so
    # |delta| bounds the neglected tail.
    abs_err = (err + abs(delta) + 8 * _EPS * l1) / (2 * math.pi)
    value /= 2 * math.pi
    converged = abs_err <= max(tol.rel_tol * abs(value), 8 * _EPS * l1 / (2 * math.pi))
    return EvalResult(complex(value), float(abs_err), int(n_evals), bool(converged),
                      {"t_max_used": t_cur, "abscissa_c": c, "l1_norm": l1 / (2 * math.pi)})


def _kzw_integrand(z: complex, w: complex, x: complex, duplication: bool):
    log_x = cmath.log(x)
    q = -w * w / 4

    def integrand(s):
        if duplication:
            # Gamma((s-1/2)/2) Gamma((s+1/2)/2) 2^{s-2} = sqrt(pi/2) Gamma(s-1/2)
            log_part = loggamma(s - 0.5) - s * log_x
            pref = _SQRT_HALF_PI
        else:
            log_part = (loggamma((s - z) / 2) + loggamma((s + z) / 2)
                        + (s - 2) * _LOG2 - s * log_x)
            pref = 1.0
        vals = pref * np.exp(log_part)
        if q != 0:
            vals = vals * hyp1f1_array((s - z) / 2, 0.5, q) * hyp1f1_array((s + z) / 2, 0.5, q)
        return vals

    return integrand


def kzw_contour(z, w, x, spec: ContourSpec = DEFAULT_CONTOUR,
                tol: ToleranceConfig = DEFAULT_TOL, duplication: bool = False) -> EvalResult:
    """K_{z,w}(x) from its Mellin-Barnes integral.

    Parameters
    ----------
    z, w, x : complex
        Order, deformation parameter and argument; x off (-inf, 0].
    spec : ContourSpec
        Integration line and truncation controls.  The abscissa must exceed
        |Re z| so that no Gamma pole sits on or right of the line.
    duplication : bool
        Only for z = 1/2: integrate the collapsed form
        sqrt(pi/2) Gamma(s - 1/2) 1F1 1F1 x^{-s} instead.

    Returns
    -------
    EvalResult
        ``abs_err`` combines the panel error estimates, the last tail
        increment and the roundoff floor of the oscillatory integrand.
    """
    p = KzwPoint(z, w, x)
    if abs(cmath.phase(p.x)) >= math.pi:
        raise DomainError("x must satisfy |arg x| < pi")
    c = spec.abscissa_c if spec.abscissa_c is not None else abs(p.z.real) + 0.75
    if not c > abs(p.z.real):
        raise DomainError(f"abscissa c={c} must exceed |Re z|={abs(p.z.real)}")
    if duplication and p.z != 0.5:
        raise ParameterError("the duplication form is only valid for z = 1/2")
    return _line_integral(_kzw_integrand(p.z, p.w, p.x, duplication), c, spec, tol)


def k_half_closed(x) -> complex:
    """K_{1/2}(x) = sqrt(pi / (2x)) e^{-x}, principal square root."""
    x = _check_cut(x)
    return cmath.sqrt(math.pi / (2 * x)) * cmath.exp(-x)


def inverse_mellin_lemma(n: int, x, spec: ContourSpec = DEFAULT_CONTOUR,
                         tol: ToleranceConfig = ToleranceConfig(rel_tol=1e-8)) -> IdentityReport:
    """Compare the contour integral

        (1/2 pi i) int_(c) Gamma(s - 1/2) Gamma(s + n) / Gamma(s) x^{-s} ds,  1/2 < c < 1,

    with (-1)^n sqrt(pi/x) 1F1(1/2; 1/2 - n; -x) / Gamma(1/2 - n).
    """
    if int(n) != n or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n}")
    n = int(n)
    x = _check_cut(x)
    c = spec.abscissa_c if spec.abscissa_c is not None else 0.75
    if not 0.5 < c < 1:
        raise DomainError(f"abscissa c={c} must lie in (1/2, 1)")
    log_x = cmath.log(x)

    def integrand(s):
        return np.exp(loggamma(s - 0.5) + loggamma(s + n) - loggamma(s) - s * log_x)

    inner = tol.tighter(1e-13)
    lhs = _line_integral(integrand, c, spec, inner)
    rhs = ((-1) ** n * cmath.sqrt(math.pi / x)
           * hyp1f1(0.5, 0.5 - n, -x, inner).value * rgamma(0.5 - n))
    return IdentityReport.compare(lhs.value, rhs, tol.rel_tol, lhs.terms_used)


def humbert_r_series(w, x, tol: ToleranceConfig = DEFAULT_TOL):
    """The r-sum multiplying sqrt(pi/(2x)) e^{-x} in the Phi3 representation:

        S(w, x) = sum_r (w^4 x^2 / 64)^r / (r! (1/2)_r (1/2)_{2r})
                        * Phi3(1/2; 1/2 + 2r; -w^2/4, -w^2 x / 4).

    Returns ``(S, abs_err, terms)``.  Stops once
    |coef_r| (1 + |Phi3_r|) < rel_tol |S| holds for two consecutive r.
    """
    w, x = as_complex(w, "w"), as_complex(x, "x")
    w2 = w * w
    q = w2 * w2 * x * x / 64
    y1, y2 = -w2 / 4, -w2 * x / 4
    coef = 1 + 0j
    total = 0j
    err = 0.0
    run = 0
    for r in range(KHALF_R_CAP):
        if r > 0:
            coef *= q / (r * (r - 0.5) * (2 * r - 1.5) * (2 * r - 0.5))
        if coef == 0:
            ph = EvalResult(1 + 0j, 0.0, 0, True)
        else:
            ph = phi3(0.5, 0.5 + 2 * r, y1, y2, tol)
        total += coef * ph.value
        err += abs(coef) * ph.abs_err
        if abs(coef) * (1 + abs(ph.value)) < tol.rel_tol * abs(total):
            run += 1
            if run >= 2:
                return total, err + abs(coef) * (1 + abs(ph.value)), r + 1
        else:
            run = 0
    raise ConvergenceError(f"Humbert r-series not settled after {KHALF_R_CAP} terms",
                           EvalResult(total, float("inf"), KHALF_R_CAP, False))


def khalf_series(w, x, tol: ToleranceConfig = DEFAULT_TOL) -> EvalResult:
    """K_{1/2,w}(x) as a series of Humbert Phi3 functions.

    At w = 0 only the r = 0 term survives and this is sqrt(pi/(2x)) e^{-x}.
    """
    x = _check_cut(x)
    pref = k_half_closed(x)
    try:
        total, err, used = humbert_r_series(w, x, tol)
    except ConvergenceError as exc:
        partial = exc.partial
        raise ConvergenceError(str(exc), EvalResult(pref * partial.value, float("inf"),
                                                    partial.terms_used, False)) from exc
    value = pref * total
    abs_err = abs(pref) * err
    return EvalResult(value, abs_err, used, abs_err <= tol.rel_tol * abs(value) or abs_err == 0)


def kzw_asymptotic(z, w, x) -> complex:
    """Large-|x| form of K_{z,w}(x) in the sector |arg x| < pi/4:

        (1/2) sqrt(pi/(2x)) e^{-x} (cos(w sqrt(2x)) P - sin(w sqrt(2x)) Q + e^{-w^2/4} R)

    with the one-correction P, Q, R; intended for |x| >= 10.
    """
    p = KzwPoint(z, w, x)
    z, w, x = p.z, p.w, p.x
    if abs(cmath.phase(x)) >= math.pi / 4:
        raise DomainError(f"kzw_asymptotic needs |arg x| < pi/4, got arg x = {cmath.phase(x):.4g}")
    root = cmath.sqrt(2 * x)
    P = 1 + (32 * z * z - 3 * w * w - 8) / (64 * x)
    Q = w / (4 * root)
    R = 1 + (4 * z * z - 1) * (2 - w * w) / (16 * x)
    bracket = cmath.cos(w * root) * P - cmath.sin(w * root) * Q + cmath.exp(-w * w / 4) * R
    return 0.5 * k_half_closed(x) * bracket
