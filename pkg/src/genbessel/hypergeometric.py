"""Confluent hypergeometric series 1F1 and 2F2, plus the identities used
to check them (Kummer's transformation, Chaundy's product expansion and
the s-derivative of 1F1 at s = 1).

All evaluation is by direct term summation.  A series stops once three
consecutive terms are each at most ``rel_tol * |partial sum|``; a single
small term is not trusted because Pochhammer products can pass close to
zero and produce one tiny term in the middle of a live series.
"""

from __future__ import annotations

import cmath
from typing import Sequence

import numpy as np

from .errors import ConvergenceError, ParameterError
from .results import DEFAULT_TOL, EvalResult, ToleranceConfig, as_complex

TERMINATING_TOL = 1e-12
_EPS = np.finfo(float).eps
_SMALL_RUN = 3


def nonpositive_integer(v: complex, tol: float = TERMINATING_TOL):
    """Return n >= 0 if v is within ``tol`` of -n, else None."""
    k = round(v.real)
    if k <= 0 and abs(v - k) < tol:
        return -k
    return None


def _series(num: Sequence[complex], den: Sequence[complex], z: complex,
            tol: ToleranceConfig, name: str) -> EvalResult:
    """Sum  sum_m prod(num)_m / prod(den)_m  z^m / m!  term by term."""
    num = [as_complex(a, "numerator parameter") for a in num]
    den = [as_complex(c, "denominator parameter") for c in den]
    z = as_complex(z, "z")

    # A nonpositive-integer numerator ends the series after |a|+1 terms.
    n_stop = None
    for i, a in enumerate(num):
        n = nonpositive_integer(a)
        if n is not None:
            num[i] = complex(-n)
            n_stop = n if n_stop is None else min(n_stop, n)
    for c in den:
        k = nonpositive_integer(c)
        if k is not None and (n_stop is None or n_stop > k):
            raise ParameterError(
                f"{name}: denominator parameter {c} is a nonpositive integer "
                "and the series does not terminate before it")

    total = 1 + 0j
    term = 1 + 0j
    abs_sum = 1.0
    run = 0
    m = 0
    while True:
        if n_stop is not None and m >= n_stop:
            # Exact polynomial; only roundoff remains.
            err = _EPS * abs_sum * (m + 1)
            return EvalResult(total, err, m + 1, True)
        if m + 1 >= tol.max_terms:
            partial = EvalResult(total, abs(term) * _SMALL_RUN, m + 1, False)
            raise ConvergenceError(
                f"{name}: no convergence after {tol.max_terms} terms", partial)
        ratio = z / (m + 1)
        for a in num:
            ratio *= a + m
        for c in den:
            ratio /= c + m
        term *= ratio
        total += term
        abs_sum += abs(term)
        m += 1
        if abs(term) <= tol.rel_tol * abs(total):
            run += 1
            if run >= _SMALL_RUN:
                break
        else:
            run = 0
    # The tail beyond three shrinking terms is bounded by a few of them.
    err = _SMALL_RUN * abs(term) + _EPS * abs_sum * np.sqrt(m + 1)
    converged = err <= tol.rel_tol * abs(total) or err == 0.0
    return EvalResult(total, err, m + 1, converged)


def hyp1f1(a, c, z, tol: ToleranceConfig = DEFAULT_TOL) -> EvalResult:
    """Kummer's function 1F1(a; c; z) by its power series.

    Terminating cases (``a`` within 1e-12 of -n) sum exactly n+1 terms,
    which also admits a nonpositive-integer ``c`` of magnitude >= n.

    Raises
    ------
    ParameterError
        ``c`` is a nonpositive integer and the series does not terminate
        before reaching it.
    ConvergenceError
        ``tol.max_terms`` reached.
    """
    return _series([a], [c], z, tol, "hyp1f1")


def hyp2f2(a1, a2, c1, c2, z, tol: ToleranceConfig = DEFAULT_TOL) -> EvalResult:
    """Generalized hypergeometric 2F2(a1, a2; c1, c2; z) by direct summation."""
    return _series([a1, a2], [c1, c2], z, tol, "hyp2f2")


def hyp1f1_array(a, c: complex, z: complex, rel_tol: float = 1e-14,
                 max_terms: int = 100_000) -> np.ndarray:
    """1F1(a; c; z) for an array of ``a`` with shared ``c`` and ``z``.

    Used by the contour integrands, where ``a`` runs along a vertical line
    and never hits a nonpositive integer.  Same stopping rule as
    :func:`hyp1f1`, applied to every element.
    """
    a = np.asarray(a, dtype=complex)
    total = np.ones_like(a)
    term = np.ones_like(a)
    run = np.zeros(a.shape, dtype=int)
    m = 0
    while np.any(run < _SMALL_RUN):
        if m >= max_terms:
            raise ConvergenceError(f"hyp1f1_array: no convergence after {max_terms} terms")
        term = term * (a + m) * z / ((c + m) * (m + 1))
        total = total + term
        small = np.abs(term) <= rel_tol * np.abs(total)
        run = np.where(small, run + 1, 0)
        m += 1
    return total


def kummer_transform_residual(a, c, z, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """|1F1(a;c;z) - e^z 1F1(c-a;c;-z)| / max(1, |1F1(a;c;z)|)."""
    a, c, z = as_complex(a), as_complex(c), as_complex(z)
    lhs = hyp1f1(a, c, z, tol).value
    rhs = cmath.exp(z) * hyp1f1(c - a, c, -z, tol).value
    return abs(lhs - rhs) / max(1.0, abs(lhs))


def chaundy_product_residual(a, a_p, c, x, r_max: int = 200,
                             tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Relative residual of Chaundy's product expansion

        1F1(a;c;x) 1F1(a';c;x)
            = sum_r (a)_r (a')_r / (r! (c)_r (c)_{2r}) x^{2r} 1F1(a+a'+2r; c+2r; x),

    scaled by max(1, |product|).

    Raises
    ------
    ConvergenceError
        The r-series has not settled by ``r_max`` terms.
    """
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    a, a_p, c, x = (as_complex(v) for v in (a, a_p, c, x))
    product = hyp1f1(a, c, x, tol).value * hyp1f1(a_p, c, x, tol).value

    coef = 1 + 0j
    total = 0j
    run = 0
    for r in range(r_max):
        if r > 0:
            coef *= ((a + r - 1) * (a_p + r - 1) * x * x
                     / (r * (c + r - 1) * (c + 2 * r - 2) * (c + 2 * r - 1)))
        term = coef * hyp1f1(a + a_p + 2 * r, c + 2 * r, x, tol).value
        total += term
        if abs(term) <= tol.rel_tol * abs(total):
            run += 1
            if run >= _SMALL_RUN:
                return abs(product - total) / max(1.0, abs(product))
        else:
            run = 0
    raise ConvergenceError(f"Chaundy series not settled after r_max={r_max} terms")


def kummer_derivative_limit(z, tol: ToleranceConfig = DEFAULT_TOL) -> complex:
    """d/ds 1F1((1-s)/2; 1/2; z^2/4) at s = 1, i.e. -(z^2/4) 2F2(1,1;3/2,2;z^2/4)."""
    q = as_complex(z) ** 2 / 4
    if q == 0:
        return 0j
    return -q * hyp2f2(1, 1, 1.5, 2, q, tol).value
