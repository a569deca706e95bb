"""Plain value types threaded through the evaluators."""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, field

from .errors import DomainError


@dataclass(frozen=True)
class ToleranceConfig:
    """Accuracy targets and work caps.

    ``max_terms`` can be overridden process-wide with the ``KZW_MAX_TERMS``
    environment variable (see :meth:`from_env`).
    """

    rel_tol: float = 1e-12
    max_terms: int = 100_000
    max_contour_height: float = 200.0

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")

    @classmethod
    def from_env(cls, **kwargs) -> "ToleranceConfig":
        env = os.environ.get("KZW_MAX_TERMS")
        if env is not None and "max_terms" not in kwargs:
            kwargs["max_terms"] = int(env)
        return cls(**kwargs)

    def tighter(self, rel_tol: float) -> "ToleranceConfig":
        """Copy with ``rel_tol`` lowered to at most the given value."""
        return ToleranceConfig(min(self.rel_tol, rel_tol), self.max_terms,
                               self.max_contour_height)


DEFAULT_TOL = ToleranceConfig()


@dataclass(frozen=True)
class EvalResult:
    value: complex
    abs_err: float
    terms_used: int
    converged: bool
    diagnostics: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        # Normalize numpy scalars so results serialize as plain Python types.
        object.__setattr__(self, "value", complex(self.value))
        object.__setattr__(self, "abs_err", float(self.abs_err))
        object.__setattr__(self, "terms_used", int(self.terms_used))
        object.__setattr__(self, "converged", bool(self.converged))

    def to_dict(self) -> dict:
        return {
            "value_re": self.value.real,
            "value_im": self.value.imag,
            "abs_err": self.abs_err,
            "terms_used": self.terms_used,
            "converged": self.converged,
        }


@dataclass(frozen=True)
class IdentityReport:
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    n_terms_lhs: int
    passed: bool

    def __post_init__(self):
        for name in ("lhs", "rhs"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        for name in ("abs_residual", "rel_residual"):
            object.__setattr__(self, name, float(getattr(self, name)))
        object.__setattr__(self, "n_terms_lhs", int(self.n_terms_lhs))
        object.__setattr__(self, "passed", bool(self.passed))

    @classmethod
    def compare(cls, lhs, rhs, tol: float, n_terms_lhs: int = 0) -> "IdentityReport":
        """Build a report; the relative scale is ``max(|lhs|, |rhs|, 1)``."""
        lhs, rhs = complex(lhs), complex(rhs)
        abs_res = abs(lhs - rhs)
        rel_res = abs_res / max(abs(lhs), abs(rhs), 1.0)
        return cls(lhs, rhs, abs_res, rel_res, n_terms_lhs, rel_res <= tol)

    def to_dict(self) -> dict:
        # JSON has no complex type; each side is split into re/im.
        return {
            "lhs": {"re": self.lhs.real, "im": self.lhs.imag},
            "rhs": {"re": self.rhs.real, "im": self.rhs.imag},
            "abs_residual": self.abs_residual,
            "rel_residual": self.rel_residual,
            "n_terms_lhs": self.n_terms_lhs,
            "pass": self.passed,
        }


def as_complex(v, name: str = "argument") -> complex:
    """Coerce to ``complex`` and reject NaN/Inf components."""
    c = complex(v)
    if not cmath.isfinite(c):
        raise DomainError(f"{name} must be finite, got {v!r}")
    return c


def as_real(v, name: str = "argument") -> float:
    c = complex(v)
    if c.imag != 0:
        raise DomainError(f"{name} must be real, got {v!r}")
    if not math.isfinite(c.real):
        raise DomainError(f"{name} must be finite, got {v!r}")
    return c.real
