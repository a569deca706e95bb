"""Humbert's confluent double series Phi1, Phi2, Phi3, generalized Laguerre
polynomials, and the generating identity that ties Laguerre sums to Phi3.

Every double series here has terms of the form A_m B_n C_{m+n}, so the
anti-diagonal m + n = k contributes C_k * sum_m A_m B_{k-m}, a discrete
convolution.  Summation runs over anti-diagonals and stops after three
consecutive diagonal contributions at most ``rel_tol * |partial sum|``.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .core import erf
from .errors import ConvergenceError, DomainError, ParameterError
from .hypergeometric import hyp1f1, nonpositive_integer
from .results import DEFAULT_TOL, EvalResult, ToleranceConfig, as_complex

PHI3_MAX_Y = 50.0
_EPS = np.finfo(float).eps
_SMALL_RUN = 3


def _check_denominator(c: complex, name: str):
    if nonpositive_integer(c) is not None:
        raise ParameterError(f"{name}: c={c} is a nonpositive integer")


def _antidiagonal_sum(a_ratio, b_ratio, c_ratio, tol: ToleranceConfig, name: str) -> EvalResult:
    """Sum  sum_{m,n} A_m B_n C_{m+n}  with A_0 = B_0 = C_0 = 1.

    The ``*_ratio(j)`` callables return X_{j+1} / X_j.
    """
    A = [1 + 0j]
    B = [1 + 0j]
    C = 1 + 0j
    total = 1 + 0j
    abs_sum = 1.0
    run = 0
    k = 0
    while True:
        if k + 1 >= tol.max_terms:
            partial = EvalResult(total, float("inf"), k + 1, False)
            raise ConvergenceError(f"{name}: no convergence after {tol.max_terms} diagonals",
                                   partial)
        A.append(A[-1] * a_ratio(k))
        B.append(B[-1] * b_ratio(k))
        C *= c_ratio(k)
        k += 1
        pairs = np.asarray(A) * np.asarray(B[::-1])
        diag = C * complex(pairs.sum())
        total += diag
        abs_sum += abs(C) * float(np.abs(pairs).sum())
        if abs(diag) <= tol.rel_tol * abs(total):
            run += 1
            if run >= _SMALL_RUN:
                break
        else:
            run = 0
    err = _SMALL_RUN * abs(diag) + _EPS * abs_sum * math.sqrt(k + 1)
    converged = err <= tol.rel_tol * abs(total) or err == 0.0
    return EvalResult(total, err, k + 1, converged)


def phi1(a, b, c, x, y, tol: ToleranceConfig = DEFAULT_TOL) -> EvalResult:
    """Phi1(a, b; c; x, y) = sum (a)_{m+n} (b)_m / (c)_{m+n} x^m y^n / (m! n!),  |x| < 1."""
    a, b, c, x, y = (as_complex(v) for v in (a, b, c, x, y))
    if abs(x) >= 1:
        raise DomainError(f"phi1 needs |x| < 1, got x={x}")
    _check_denominator(c, "phi1")
    return _antidiagonal_sum(
        lambda m: (b + m) * x / (m + 1),
        lambda n: y / (n + 1),
        lambda k: (a + k) / (c + k),
        tol, "phi1")


def phi2(a, a_p, c, x, y, tol: ToleranceConfig = DEFAULT_TOL) -> EvalResult:
    """Phi2(a, a'; c; x, y) = sum (a)_m (a')_n / (c)_{m+n} x^m y^n / (m! n!)."""
    a, a_p, c, x, y = (as_complex(v) for v in (a, a_p, c, x, y))
    _check_denominator(c, "phi2")
    return _antidiagonal_sum(
        lambda m: (a + m) * x / (m + 1),
        lambda n: (a_p + n) * y / (n + 1),
        lambda k: 1 / (c + k),
        tol, "phi2")


def phi3(a, c, x, y, tol: ToleranceConfig = DEFAULT_TOL) -> EvalResult:
    """Humbert's Phi3(a; c; x, y) = sum (a)_m / (c)_{m+n} x^m y^n / (m! n!).

    Entire in both variables, but direct summation loses accuracy as |y|
    grows, so |y| is capped at 50.
    """
    a, c, x, y = (as_complex(v) for v in (a, c, x, y))
    _check_denominator(c, "phi3")
    if abs(y) > PHI3_MAX_Y:
        raise DomainError(f"phi3: |y| = {abs(y):.3g} exceeds the supported {PHI3_MAX_Y}")
    return _antidiagonal_sum(
        lambda m: (a + m) * x / (m + 1),
        lambda n: y / (n + 1),
        lambda k: 1 / (c + k),
        tol, "phi3")


def phi3_reduction_13_2(w, z) -> complex:
    """Closed form of Phi3(1; 3/2; w, z) in terms of erf (principal roots)."""
    w, z = as_complex(w, "w"), as_complex(z, "z")
    if w == 0:
        raise DomainError("phi3_reduction_13_2 is undefined at w = 0")
    rw, rz = cmath.sqrt(w), cmath.sqrt(z)
    pref = math.sqrt(math.pi) * cmath.exp(w + z / w) / (4 * rw)
    return pref * (erf((w - rz) / rw) + erf((w + rz) / rw))


def laguerre(n: int, alpha, x, tol: ToleranceConfig = DEFAULT_TOL) -> complex:
    """Generalized Laguerre polynomial L_n^alpha(x).

    Uses L_n^alpha(x) = (alpha+1)_n / n! * 1F1(-n; alpha+1; x); the prefactor
    is accumulated as a product so it stays finite where the equivalent
    Gamma ratio would be inf/inf.
    """
    if int(n) != n or n < 0:
        raise DomainError(f"laguerre needs integer n >= 0, got {n}")
    n = int(n)
    alpha, x = as_complex(alpha, "alpha"), as_complex(x, "x")
    pref = 1 + 0j
    for k in range(1, n + 1):
        pref *= (alpha + k) / k
    return pref * hyp1f1(-n, alpha + 1, x, tol).value


def laguerre_generating_residual(alpha, beta, t, x, k_max: int = 200,
                                 tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Relative residual of  sum_k t^k/(beta)_k L_k^{alpha-k}(x) = Phi3(-alpha; beta; -t, -t x).

    Raises
    ------
    ConvergenceError
        The Laguerre sum has not settled within ``k_max`` terms.
    """
    alpha, beta, t, x = (as_complex(v) for v in (alpha, beta, t, x))
    _check_denominator(beta, "laguerre_generating_residual")
    rhs = phi3(-alpha, beta, -t, -t * x, tol).value
    coef = 1 + 0j
    total = 0j
    run = 0
    for k in range(k_max):
        if k > 0:
            coef *= t / (beta + k - 1)
        term = coef * laguerre(k, alpha - k, x, tol)
        total += term
        if abs(term) <= tol.rel_tol * abs(total):
            run += 1
            if run >= _SMALL_RUN:
                return abs(total - rhs) / max(1.0, abs(rhs))
        else:
            run = 0
    raise ConvergenceError(f"Laguerre generating sum not settled after k_max={k_max} terms")
