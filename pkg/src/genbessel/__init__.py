"""Generalized modified Bessel function K_{z,w}(x) and related special functions.

Three independent evaluation paths for K_{z,w}(x) -- the Mellin-Barnes line
integral (:func:`kzw_contour`), the Humbert Phi_3 series at order 1/2
(:func:`khalf_series`) and the large-x expansion (:func:`kzw_asymptotic`) --
plus residual checkers for the divisor-sum transformation formulas they
satisfy, and the Voigt profile / CDF.
"""

from .core import erf, erfi, gamma, loggamma, pochhammer, rgamma, sigma, zeta
from .errors import (ContourError, ConvergenceError, DomainError, GenBesselError,
                     ParameterError, PoleError)
from .humbert import (laguerre, laguerre_generating_residual, phi1, phi2, phi3,
                      phi3_reduction_13_2)
from .hypergeometric import (chaundy_product_residual, hyp1f1, hyp2f2,
                             kummer_derivative_limit, kummer_transform_residual)
from .identities import (ModularPair, check_eta_transformation, check_generalized_eta,
                         check_generalized_ramanujan_guinand, check_ramanujan_guinand,
                         check_contour_vs_series, generalized_eta_rhs)
from .kzw import (ContourSpec, KzwPoint, inverse_mellin_lemma, k_half_closed,
                  khalf_series, kzw_asymptotic, kzw_contour)
from .results import DEFAULT_TOL, EvalResult, IdentityReport, ToleranceConfig
from .voigt import VoigtParams, faddeeva, voigt_cdf, voigt_cdf_result, voigt_profile

__all__ = [name for name in dir() if not name.startswith("_")]
