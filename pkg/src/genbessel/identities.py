"""Residual checks for the modular-type transformation formulas.

Each checker evaluates both sides independently and returns an
:class:`~genbessel.results.IdentityReport`.  Divisor sums over n are cut
at the first term with |term| <= rel_tol * max(1, |partial sum|); that term
is not added, and ``n_terms_lhs`` counts the terms that were.  The floor of
1 matches the residual scale max(|lhs|, |rhs|, 1): a sum that is itself tiny
(e.g. e^{-2nb} terms for large b) would otherwise chase the quadrature noise
floor of its own terms.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .core import erf, erfi, gamma, sigma, zeta
from .errors import ConvergenceError, DomainError
from .humbert import phi3
from .hypergeometric import hyp1f1, hyp2f2
from .kzw import DEFAULT_CONTOUR, ContourSpec, khalf_series, kzw_contour
from .results import IdentityReport, ToleranceConfig, as_complex, as_real

PI2 = math.pi ** 2
N_CAP = 10_000
CHECK_TOL = ToleranceConfig(rel_tol=1e-8)


@dataclass(frozen=True)
class ModularPair:
    """Positive a, b with a * b = pi^2."""

    a: float
    b: float

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise DomainError(f"a and b must be positive, got a={self.a}, b={self.b}")
        if abs(self.a * self.b - PI2) > 1e-14 * PI2:
            raise DomainError(f"a*b = {self.a * self.b!r} differs from pi^2")

    @classmethod
    def from_a(cls, a: float) -> "ModularPair":
        return cls(float(a), PI2 / float(a))

    def swapped(self) -> "ModularPair":
        return ModularPair(self.b, self.a)


def _inner(tol: ToleranceConfig) -> ToleranceConfig:
    return tol.tighter(1e-12)


def _sum_over_n(term, rel_tol: float, cap: int = N_CAP):
    """sum_{n>=1} term(n), stopped at the first negligible term."""
    total = 0j
    for n in range(1, cap + 1):
        t = term(n)
        if n > 1 and abs(t) <= rel_tol * max(1.0, abs(total)):
            return total, n - 1
        total += t
    raise ConvergenceError(f"divisor sum not settled after {cap} terms")


def _check_order(z: complex):
    if z.real <= 0:
        raise DomainError(f"order z must have Re z > 0, got {z}")
    for pole in (1, 2, 4, 6, 8, 10):
        if abs(z - pole) < 0.1:
            raise DomainError(f"order z={z} is within 0.1 of the pole at {pole}")


def _rg_rhs(z: complex, w: complex, pair: ModularPair, tol: ToleranceConfig) -> complex:
    a, b = pair.a, pair.b
    q = w * w / 4
    f_minus = lambda arg: hyp1f1((1 - z) / 2, 0.5, arg, tol).value
    f_plus = lambda arg: hyp1f1((1 + z) / 2, 0.5, arg, tol).value
    first = 0.25 * gamma(z / 2) * zeta(z) * (
        b ** ((1 - z) / 2) * f_minus(q) - a ** ((1 - z) / 2) * f_minus(-q))
    second = 0.25 * gamma(-z / 2) * zeta(-z) * (
        b ** ((1 + z) / 2) * f_plus(q) - a ** ((1 + z) / 2) * f_plus(-q))
    return first + second


def check_generalized_ramanujan_guinand(z, w, pair: ModularPair,
                                        tol: ToleranceConfig = CHECK_TOL,
                                        spec: ContourSpec = DEFAULT_CONTOUR) -> IdentityReport:
    """Divisor sums of K_{z/2, iw}(2na) and K_{z/2, w}(2nb) against the
    Gamma-zeta-1F1 closed form.  K values come from the contour integral.
    """
    z, w = as_complex(z, "z"), as_complex(w, "w")
    _check_order(z)
    inner = _inner(tol)
    a, b = pair.a, pair.b
    damp_a, damp_b = cmath.exp(-w * w / 4), cmath.exp(w * w / 4)

    def term_a(n):
        k = kzw_contour(z / 2, 1j * w, 2 * n * a, spec, inner).value
        return sigma(-z, n) * n ** (z / 2) * damp_a * k

    def term_b(n):
        k = kzw_contour(z / 2, w, 2 * n * b, spec, inner).value
        return sigma(-z, n) * n ** (z / 2) * damp_b * k

    sum_a, na = _sum_over_n(term_a, inner.rel_tol)
    sum_b, nb = _sum_over_n(term_b, inner.rel_tol)
    lhs = math.sqrt(a) * sum_a - math.sqrt(b) * sum_b
    return IdentityReport.compare(lhs, _rg_rhs(z, w, pair, inner), tol.rel_tol, na + nb)


def check_ramanujan_guinand(z, pair: ModularPair, tol: ToleranceConfig = CHECK_TOL,
                            spec: ContourSpec = DEFAULT_CONTOUR) -> IdentityReport:
    """The classical formula: the w = 0 case of the generalized one."""
    return check_generalized_ramanujan_guinand(z, 0.0, pair, tol, spec)


def check_eta_transformation(pair: ModularPair,
                             tol: ToleranceConfig = ToleranceConfig(rel_tol=1e-10)) -> IdentityReport:
    """sum sigma_{-1}(n) e^{-2na} - sum sigma_{-1}(n) e^{-2nb} = (b-a)/12 + log(a/b)/4."""
    inner = _inner(tol)
    a, b = pair.a, pair.b
    sum_a, na = _sum_over_n(lambda n: sigma(-1, n).real * math.exp(-2 * n * a), inner.rel_tol)
    sum_b, nb = _sum_over_n(lambda n: sigma(-1, n).real * math.exp(-2 * n * b), inner.rel_tol)
    rhs = (b - a) / 12 + 0.25 * math.log(a / b)
    return IdentityReport.compare(sum_a - sum_b, rhs, tol.rel_tol, na + nb)


def _r_sum(w2: float, xn: float, sign: int, tol: ToleranceConfig) -> complex:
    """sum_r (w^2 x_n / 4)^{2r} / (r! (1/2)_r (1/2)_{2r}) Phi3(1/2; 1/2+2r; s w^2/4, s w^2 x_n / 2)
    with s = ``sign``; same two-in-a-row stopping rule as the K_{1/2,w} series."""
    q = (w2 * xn / 4) ** 2
    coef = 1.0
    total = 0j
    run = 0
    for r in range(64):
        if r > 0:
            coef *= q / (r * (r - 0.5) * (2 * r - 1.5) * (2 * r - 0.5))
        ph = 1 + 0j if coef == 0 else phi3(0.5, 0.5 + 2 * r, sign * w2 / 4,
                                            sign * w2 * xn / 2, tol).value
        total += coef * ph
        if abs(coef) * (1 + abs(ph)) < tol.rel_tol * abs(total):
            run += 1
            if run >= 2:
                return total
        else:
            run = 0
    raise ConvergenceError("inner r-series not settled after 64 terms")


def check_generalized_eta(w, pair: ModularPair,
                          tol: ToleranceConfig = ToleranceConfig(rel_tol=1e-7)) -> IdentityReport:
    """The w-deformed eta transformation, LHS as explicit Phi3 double sums.

    ``w`` must be real with |w| <= 2.
    """
    w = as_real(w, "w")
    if abs(w) > 2:
        raise DomainError(f"generalized eta check supports |w| <= 2, got {w}")
    inner = _inner(tol)
    a, b = pair.a, pair.b
    w2 = w * w

    def term_a(n):
        return sigma(-1, n).real * math.exp(-2 * n * a) * _r_sum(w2, n * a, +1, inner)

    def term_b(n):
        return sigma(-1, n).real * math.exp(-2 * n * b) * _r_sum(w2, n * b, -1, inner)

    sum_a, na = _sum_over_n(term_a, inner.rel_tol)
    sum_b, nb = _sum_over_n(term_b, inner.rel_tol)
    lhs = math.exp(-w2 / 4) * sum_a - math.exp(w2 / 4) * sum_b
    return IdentityReport.compare(lhs, generalized_eta_rhs(w, pair, inner), tol.rel_tol, na + nb)


def generalized_eta_rhs(w: float, pair: ModularPair,
                        tol: ToleranceConfig = ToleranceConfig()) -> float:
    a, b = pair.a, pair.b
    w2 = w * w
    f = lambda arg: hyp2f2(1, 1, 1.5, 2, arg, tol).value.real
    log_part = 0.25 * (math.log(a / b) - w2 / 2 * (f(w2 / 4) + f(-w2 / 4)))
    g = w * math.sqrt(math.pi) / 2
    lin_part = (b * (1 + g * math.exp(w2 / 4) * erf(w / 2).real)
                - a * (1 - g * math.exp(-w2 / 4) * erfi(w / 2).real)) / 12
    return log_part + lin_part


def check_contour_vs_series(w, x, tol: ToleranceConfig = CHECK_TOL,
                    spec: ContourSpec = DEFAULT_CONTOUR) -> IdentityReport:
    """Contour integral of K_{1/2,w}(x) against its Phi3 series."""
    inner = _inner(tol)
    series = khalf_series(w, x, inner)
    contour = kzw_contour(0.5, w, x, spec, inner)
    return IdentityReport.compare(contour.value, series.value, tol.rel_tol, series.terms_used)
