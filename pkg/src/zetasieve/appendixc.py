"""Off-line candidate analysis: L(sigma, rho), dL/dsigma, B(sigma, rho), rho_s.

L(sigma, rho) = (4 pi^2)^(sigma - 1/2) |Gamma(1/2 + i rho)|^2 / |Gamma(sigma + i rho)|^2 - 1
is the left-hand side of the constraint that P^2 + Q^2 = 1 imposes on
(sigma, rho); the right-hand side is cos(pi sigma) / cosh(pi rho).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from scipy.optimize import brentq

from . import specfun
from ._grid import halton_points
from .errors import NoRootError, RangeError

LOG_4PI2 = 2.0 * specfun.LOG_2PI
PRINTED_COEFFICIENT = 4.0 * math.pi**2
CALIBRATED_COEFFICIENT = LOG_4PI2
CALIBRATION_TOL = 1e-6
FD_STEP = 1e-3


@dataclass(frozen=True)
class LScanRow:
    sigma: float
    rho: float
    l_value: float
    rhs: float
    b_value: float


@dataclass(frozen=True)
class DlCalibration:
    """Outcome of fitting the constant in dL/dsigma = (L + 1)(c - 2 Re psi)."""

    chosen: str
    coefficient: float
    fitted_min: float
    fitted_max: float
    printed_max_dev: float
    calibrated_max_dev: float
    n_points: int


@dataclass(frozen=True)
class RhoS:
    rho_s: float
    bracket: tuple[float, float]
    alt_root: float


def l_function(sigma: float, rho: float) -> float:
    specfun.check_window(sigma, rho)
    log_ratio = (
        (sigma - 0.5) * LOG_4PI2
        + 2.0 * specfun.log_abs_gamma(0.5, rho)
        - 2.0 * specfun.log_abs_gamma(sigma, rho)
    )
    return math.expm1(log_ratio)


def l_endpoints(rho: float) -> tuple[float, float]:
    """Closed forms of L at sigma = 0 and sigma = 1."""
    if not rho > 0:
        raise RangeError(f"rho must be positive, got {rho}")
    t = math.tanh(math.pi * rho)
    return rho * t / (2.0 * math.pi) - 1.0, 2.0 * math.pi * t / rho - 1.0


def rhs(sigma: float, rho: float) -> float:
    """cos(pi sigma) / cosh(pi rho), zero once cosh overflows."""
    x = math.pi * abs(rho)
    if x > 700.0:
        return 0.0
    return math.cos(math.pi * sigma) / math.cosh(x)


def l_fd_derivative(sigma: float, rho: float, h: float = FD_STEP) -> float:
    """Five-point central difference of l_function in sigma."""
    f = lambda d: l_function(sigma + d, rho)  # noqa: E731
    return (-f(2 * h) + 8 * f(h) - 8 * f(-h) + f(-2 * h)) / (12 * h)


def calibration_grid(n: int = 50) -> list[tuple[float, float]]:
    """Deterministic (sigma, rho) points on [0.05, 0.95] x [0.5, 50]."""
    return halton_points(n, (0.05, 0.95), (0.5, 50.0))


def calibrate_dl_coefficient(points=None) -> DlCalibration:
    """Fit c in dL/dsigma = (L + 1)(c - 2 Re psi) against finite differences.

    The printed coefficient 4 pi^2 is kept only if every fitted value lies
    within CALIBRATION_TOL of it; otherwise log(4 pi^2) is used.
    """
    points = calibration_grid() if points is None else points
    fitted = []
    for sigma, rho in points:
        scale = l_function(sigma, rho) + 1.0
        psi = specfun.digamma_complex(sigma, rho).real
        fitted.append(l_fd_derivative(sigma, rho) / scale + 2.0 * psi)
    printed_dev = max(abs(c - PRINTED_COEFFICIENT) for c in fitted)
    calibrated_dev = max(abs(c - CALIBRATED_COEFFICIENT) for c in fitted)
    if printed_dev <= CALIBRATION_TOL:
        chosen, coef = "printed", PRINTED_COEFFICIENT
    else:
        chosen, coef = "calibrated", CALIBRATED_COEFFICIENT
    return DlCalibration(chosen, coef, min(fitted), max(fitted), printed_dev,
                         calibrated_dev, len(points))


@functools.lru_cache(maxsize=1)
def default_calibration() -> DlCalibration:
    return calibrate_dl_coefficient()


def b_factor(sigma: float, rho: float, coefficient: float | None = None) -> float:
    """c - 2 Re psi(sigma + i rho), the sign-carrying factor of dL/dsigma."""
    if coefficient is None:
        coefficient = default_calibration().coefficient
    return coefficient - 2.0 * specfun.digamma_complex(sigma, rho).real


def dl_dsigma(sigma: float, rho: float, coefficient: float | None = None) -> float:
    return (l_function(sigma, rho) + 1.0) * b_factor(sigma, rho, coefficient)


def _rho_s_target(rho: float) -> float:
    return l_endpoints(rho)[0] - rhs(0.0, rho)


def find_rho_s(lo: float = 1.0, hi: float = 20.0, step: float = 0.01,
               tol: float = 1e-14) -> RhoS:
    """Root of L(0, rho) = cos(0)/cosh(pi rho) on [lo, hi].

    Also returns the nearby root of L(0, rho) = 0 for comparison.
    """
    n = max(1, math.ceil((hi - lo) / step - 1e-9))
    xs = [lo + (hi - lo) * i / n for i in range(n + 1)]
    prev = _rho_s_target(xs[0])
    for a, b in zip(xs, xs[1:]):
        cur = _rho_s_target(b)
        if prev * cur < 0 or cur == 0.0:
            root = brentq(_rho_s_target, a, b, xtol=tol)
            alt = brentq(lambda r: l_endpoints(r)[0], a - step, b + step, xtol=tol)
            return RhoS(root, (a, b), alt)
        prev = cur
    raise NoRootError(f"L(0, rho) - 1/cosh(pi rho) has no sign change on [{lo}, {hi}]")


def scan_rows(sigmas, rhos, coefficient: float | None = None) -> list[LScanRow]:
    """LScanRow for every (rho, sigma) pair, rho-major."""
    rows = []
    for rho in rhos:
        for sigma in sigmas:
            rows.append(LScanRow(sigma, rho, l_function(sigma, rho), rhs(sigma, rho),
                                 b_factor(sigma, rho, coefficient)))
    return rows
