"""Critical-line factors and the two transcendental sieve functions.

On sigma = 1/2 the reflection conditions collapse to

    zeta_R = (N / D_R) zeta_I,    zeta_I = (N / D_I) zeta_R,

with N^2 = D_R D_I and D_R + D_I = 1.  Roots of N are the half-zeros
(zeta_R = 0 where D_I = 0, zeta_I = 0 where D_R = 0).  Full-zeros are
roots of D_R zeta'_I + N zeta'_R, where zeta'_R, zeta'_I are the real
and imaginary parts of the complex derivative zeta'(s).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import specfun
from .errors import RangeError
from .funceq import hyperbolic_gamma

_SQRT_PI = math.sqrt(math.pi)
POLE_PROXIMITY = 1e-3


@dataclass(frozen=True)
class CriticalLineFactors:
    n: float
    dr: float
    di: float
    cp: float
    cm: float
    rho: float


@dataclass(frozen=True)
class AsymptoticRatio:
    exact: float
    tan_sum: float
    stirling_approx: float
    stirling_tan: float
    pole_proximity: bool


def _check_rho(rho: float) -> None:
    if not (rho > 0 and math.isfinite(rho)):
        raise RangeError(f"rho must be positive and finite, got {rho}")


def rho_pi(rho: float) -> float:
    return rho * specfun.LOG_2PI


def rho_l(rho: float) -> float:
    return 0.5 * rho * math.log(0.25 + rho * rho)


def _cp_cm(rho: float, mode: str):
    gr, gi, ch, sh = hyperbolic_gamma(0.5, rho, mode)
    return ch * gr + sh * gi, -sh * gr + ch * gi


def factors(rho: float, mode: str = "auto") -> CriticalLineFactors:
    _check_rho(rho)
    cp, cm = _cp_cm(rho, mode)
    c, s = math.cos(rho_pi(rho)), math.sin(rho_pi(rho))
    # normalised so that N^2 = D_R D_I (N = -P/2 on the critical line)
    n = (cp * s - cm * c) / (2.0 * _SQRT_PI)
    dr = 0.5 - 0.5 * (cp * c + cm * s) / _SQRT_PI
    return CriticalLineFactors(n=n, dr=dr, di=1.0 - dr, cp=cp, cm=cm, rho=rho)


def half_zero_function(rho: float, mode: str = "auto") -> float:
    """C_m cos(rho_pi) - C_p sin(rho_pi); its roots are the half-zeros.

    C_p and C_m are O(1) on the critical line (the exp(pi rho/2) growth of
    cosh/sinh cancels the decay of Gamma), so no rescaling is applied.
    """
    _check_rho(rho)
    cp, cm = _cp_cm(rho, mode)
    return cm * math.cos(rho_pi(rho)) - cp * math.sin(rho_pi(rho))


def full_zero_function(rho: float, m: int = 1, mode: str = "auto") -> float:
    """N d^m zeta_I/drho^m - D_R d^m zeta_R/drho^m at s = 1/2 + i rho.

    For m = 1 this is D_R zeta'_I + N zeta'_R with zeta' = d zeta/ds,
    since d zeta_R/drho = -Im zeta' and d zeta_I/drho = Re zeta'.
    """
    _check_rho(rho)
    if m not in (1, 2):
        raise ValueError("m must be 1 or 2")
    f = factors(rho, mode)
    d = specfun.zeta_rho_deriv(0.5, rho, m)
    return f.n * d.imag - f.dr * d.real


def _near_tan_pole(x: float) -> bool:
    return abs(math.remainder(x - 0.5 * math.pi, math.pi)) < POLE_PROXIMITY


def asymptotic_ratio(rho: float) -> AsymptoticRatio:
    """Gamma_I/Gamma_R against its tanh/tan rewriting and Stirling forms.

    ``tan_sum`` equals ``exact`` only at roots of half_zero_function;
    ``stirling_tan`` approximates tan(rho_pi) there.  Values are diagnostic.
    """
    if not rho > 1:
        raise RangeError(f"asymptotic_ratio needs rho > 1, got {rho}")
    g = specfun.gamma_complex(0.5, rho)
    exact = g.imag / g.real
    t = math.tanh(0.5 * math.pi * rho)
    rp, rl = rho_pi(rho), rho_l(rho)
    tan_rp = math.tan(rp)
    tan_sum = (t + tan_rp) / (1.0 - t * tan_rp)
    stirling = -math.tan(rho - rl)
    stirling_tan = (-math.cos(2 * rho) + math.sin(2 * rl)) / (-math.sin(2 * rho) + math.cos(2 * rl))
    near = (
        _near_tan_pole(rp)
        or _near_tan_pole(rho - rl)
        or abs(g.real) < POLE_PROXIMITY * abs(g)
        or abs(1.0 - t * tan_rp) < POLE_PROXIMITY
        or abs(-math.sin(2 * rho) + math.cos(2 * rl)) < POLE_PROXIMITY
    )
    return AsymptoticRatio(exact, tan_sum, stirling, stirling_tan, near)
