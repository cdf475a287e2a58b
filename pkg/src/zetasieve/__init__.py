"""Real/imaginary decomposition of the zeta functional equation, with
critical-line zero location and an off-line candidate scan."""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import (
    AccuracyError,
    EvaluationError,
    NoConvergenceError,
    NoRootError,
    NonFiniteSampleError,
    PoleError,
    RangeError,
    ZetaSieveError,
)
from .specfun import StripPoint, digamma_complex, gamma_complex, zeta_rho_deriv, zeta_strip
from .funceq import decompose, functional_residuals, pq_coefficients, sieve_residuals
from .critline import asymptotic_ratio, factors, full_zero_function, half_zero_function
from .zerofind import ScanConfig, ZeroKind, ZeroRecord, classify, refine_root, run_campaign
from .appendixc import b_factor, dl_dsigma, find_rho_s, l_function

__all__ = [
    "AccuracyError", "EvaluationError", "NoConvergenceError", "NoRootError",
    "NonFiniteSampleError", "PoleError", "RangeError", "ZetaSieveError",
    "StripPoint", "digamma_complex", "gamma_complex", "zeta_rho_deriv", "zeta_strip",
    "decompose", "functional_residuals", "pq_coefficients", "sieve_residuals",
    "asymptotic_ratio", "factors", "full_zero_function", "half_zero_function",
    "ScanConfig", "ZeroKind", "ZeroRecord", "classify", "refine_root", "run_campaign",
    "b_factor", "dl_dsigma", "find_rho_s", "l_function",
]
