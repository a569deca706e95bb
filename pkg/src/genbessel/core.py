"""Foundation scalars: Gamma, Pochhammer, zeta, error functions, divisor sums.

Gamma uses a Lanczos approximation (g = 7, nine terms) on the right
half-plane and reflection elsewhere.  Everything here accepts Python
complex scalars; :func:`loggamma` also accepts numpy arrays because the
contour integrands call it on whole panels of nodes at once.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
import scipy.special as sc

from .errors import DomainError, PoleError
from .results import as_complex

POLE_TOL = 1e-14

_LANCZOS_G = 7.0
_LANCZOS_COEF = np.array([
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
])
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)


def _near_nonpositive_integer(s, tol=POLE_TOL):
    """Boolean (array) flag for points within ``tol`` of 0, -1, -2, ..."""
    s = np.asarray(s, dtype=complex)
    k = np.round(s.real)
    return (k <= 0) & (np.abs(s - k) < tol)


def _lanczos_loggamma(s):
    # Valid for Re(s) >= 1/2.
    z = s - 1.0
    acc = np.full_like(z, _LANCZOS_COEF[0])
    for i in range(1, len(_LANCZOS_COEF)):
        acc = acc + _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * np.log(t) - t + np.log(acc)


def log_sin_pi(s):
    """A logarithm of sin(pi*s) that stays finite for large |Im s|.

    The branch is arbitrary (only ``exp`` of the result is meaningful).
    """
    s = np.asarray(s, dtype=complex)
    out = np.empty_like(s)
    upper = s.imag >= 0
    su, sl = s[upper], s[~upper]
    # sin(pi s) = (i/2) e^{-i pi s} (1 - e^{2 i pi s}) for Im s >= 0
    out[upper] = -1j * np.pi * su + np.log1p(-np.exp(2j * np.pi * su)) + np.log(0.5j)
    out[~upper] = 1j * np.pi * sl + np.log1p(-np.exp(-2j * np.pi * sl)) + np.log(-0.5j)
    return out


def loggamma(s):
    """A logarithm of Gamma(s) for complex scalars or arrays.

    Not the principal-branch log-Gamma: the imaginary part may differ by
    multiples of 2*pi.  Callers exponentiate sums of these values.
    """
    arr = np.asarray(s, dtype=complex)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if np.any(_near_nonpositive_integer(arr)):
        raise PoleError("loggamma evaluated at a nonpositive integer")
    out = np.empty_like(arr)
    right = arr.real >= 0.5
    out[right] = _lanczos_loggamma(arr[right])
    left = arr[~right]
    out[~right] = _LOG_PI - log_sin_pi(left) - _lanczos_loggamma(1.0 - left)
    return out[0] if scalar else out


def gamma(s) -> complex:
    """Complex Gamma function.

    Raises
    ------
    PoleError
        If ``s`` lies within 1e-14 of a nonpositive integer.
    """
    s = as_complex(s, "s")
    if _near_nonpositive_integer(s):
        raise PoleError(f"Gamma has a pole at s={s}")
    if s.real < 0.5:
        # Direct reflection keeps full relative accuracy near the poles.
        return complex(math.pi / (cmath.sin(math.pi * s) * gamma(1.0 - s)))
    return complex(np.exp(_lanczos_loggamma(np.complex128(s))))


def rgamma(s) -> complex:
    """1/Gamma(s), entire; zero at the nonpositive integers."""
    s = as_complex(s, "s")
    if _near_nonpositive_integer(s):
        return 0j
    return 1.0 / gamma(s)


def pochhammer(a, m: int) -> complex:
    """Rising factorial (a)_m = a (a+1) ... (a+m-1)."""
    if m < 0:
        raise DomainError(f"pochhammer needs m >= 0, got {m}")
    a = as_complex(a, "a")
    if m <= 50 or _near_nonpositive_integer(a):
        out = 1 + 0j
        for k in range(m):
            out *= a + k
        return out
    if _near_nonpositive_integer(a + m):
        # a + m sits on a pole but a does not: product has no zero factor.
        return pochhammer(a, 50) * pochhammer(a + 50, m - 50)
    return complex(np.exp(loggamma(a + m) - loggamma(a)))


# --- Riemann zeta -----------------------------------------------------------

def _borwein_weights(n: int) -> np.ndarray:
    # d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), exact in integers.
    d, acc = [], 0
    for i in range(n + 1):
        acc += math.factorial(n + i - 1) * 4**i // (math.factorial(n - i) * math.factorial(2 * i))
        d.append(n * acc)
    dn = d[-1]
    return np.array([(-1) ** k * (d[k] - dn) / dn for k in range(n)])


_ETA_N = 64
_ETA_W = _borwein_weights(_ETA_N)
_ETA_K = np.arange(1, _ETA_N + 1, dtype=float)


def _eta(s: complex) -> complex:
    """Dirichlet eta by Borwein's accelerated alternating series, Re(s) > 0."""
    return complex(-np.sum(_ETA_W * np.exp(-s * np.log(_ETA_K))))


def _expm1(u: complex) -> complex:
    if abs(u) < 1e-5:
        return u * (1 + u / 2 * (1 + u / 3 * (1 + u / 4)))
    return cmath.exp(u) - 1


def zeta(s) -> complex:
    """Riemann zeta function for moderate |s|.

    Accelerated Dirichlet-eta series on Re(s) > 0; the functional equation
    maps everything else there.
    """
    s = as_complex(s, "s")
    if s == 1:
        raise PoleError("zeta has a pole at s=1")
    if s == 0:
        return -0.5 + 0j
    if s.real > 0:
        # 1 - 2^{1-s}, accurate as s -> 1
        denom = -_expm1((1 - s) * math.log(2.0))
        return _eta(s) / denom
    if s.imag == 0 and s.real == round(s.real) and int(s.real) % 2 == 0:
        return 0j  # trivial zeros
    return (2**s * math.pi ** (s - 1) * cmath.sin(math.pi * s / 2)
            * gamma(1 - s) * zeta(1 - s))


# --- error functions --------------------------------------------------------

def erf(w) -> complex:
    """Error function (2/sqrt(pi)) * int_0^w exp(-t^2) dt, complex argument."""
    return complex(sc.erf(as_complex(w, "w")))


def erfi(w) -> complex:
    """Imaginary error function (2/sqrt(pi)) * int_0^w exp(t^2) dt."""
    return complex(sc.erfi(as_complex(w, "w")))


# --- divisor sums -----------------------------------------------------------

def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def sigma(z, n: int) -> complex:
    """Generalized divisor sum sigma_z(n) = sum_{d | n} d^z."""
    if int(n) != n or n < 1:
        raise DomainError(f"sigma needs an integer n >= 1, got {n}")
    z = as_complex(z, "z")
    return sum(complex(d) ** z for d in divisors(int(n)))
