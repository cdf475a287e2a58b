"""Real/imaginary decomposition of the functional equation.

With s = sigma + i rho and zeta(1 - s) = chi(s) zeta(s), write
chi(s) = Q + i P.  Splitting into real and imaginary parts couples
(zeta_R, zeta_I) at s to the reflected pair (zeta~_R, zeta~_I), where
zeta(1 - s) = zeta~_R - i zeta~_I:

    zeta~_I = -Q zeta_I - P zeta_R
    zeta~_R = -P zeta_I + Q zeta_R

P and Q are assembled here from Gamma_R, Gamma_I and hyperbolic factors,
and independently from chi(s) itself for cross-checking.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

from . import specfun
from .errors import EvaluationError

LOG_SPACE_THRESHOLD = 30.0
MODES = ("auto", "direct", "log")


@dataclass(frozen=True)
class DecompositionQuad:
    zr: float
    zi: float
    zr_ref: float
    zi_ref: float


@dataclass(frozen=True)
class PQCoefficients:
    p: float
    q: float

    @property
    def norm2(self) -> float:
        return self.p * self.p + self.q * self.q


class FunctionalResiduals(NamedTuple):
    r_i: float
    r_r: float


class SieveResiduals(NamedTuple):
    g1: float
    g2: float


def use_log_space(rho: float, mode: str) -> bool:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if mode == "auto":
        return abs(rho) > LOG_SPACE_THRESHOLD
    return mode == "log"


def hyperbolic_gamma(sigma: float, rho: float, mode: str = "auto"):
    """(Gamma_R, Gamma_I, cosh(pi rho/2), sinh(pi rho/2)) for rho >= 0.

    In log-space mode Gamma is multiplied by exp(pi rho / 2) and the
    hyperbolic factors divided by it, so every product Gamma_x * cosh and
    Gamma_x * sinh is unchanged but each factor stays representable.
    """
    half = 0.5 * math.pi * rho
    if use_log_space(rho, mode):
        g = cmath.exp(specfun.loggamma(complex(sigma, rho)) + half)
        e = math.exp(-2.0 * half)
        return g.real, g.imag, 0.5 * (1.0 + e), 0.5 * (1.0 - e)
    g = specfun.gamma_complex(sigma, rho)
    try:
        return g.real, g.imag, math.cosh(half), math.sinh(half)
    except OverflowError as exc:
        raise EvaluationError(f"cosh(pi*rho/2) overflows binary64 at rho={rho}") from exc


def chi_factor(sigma: float, rho: float) -> complex:
    """chi(s) = 2 Gamma(s) cos(pi s / 2) (2 pi)^(-s), assembled in log space."""
    specfun.check_window(sigma, rho)
    if rho < 0:
        return chi_factor(sigma, -rho).conjugate()
    s = complex(sigma, rho)
    # cos(pi s/2) = exp(-i pi s/2) (1 + exp(i pi s)) / 2
    log_mag = math.log(2.0) - s * specfun.LOG_2PI + specfun.loggamma(s) - 0.5j * math.pi * s
    return cmath.exp(log_mag) * 0.5 * (1.0 + cmath.exp(1j * math.pi * s))


def pq_coefficients(sigma: float, rho: float, mode: str = "auto") -> PQCoefficients:
    """P and Q from the explicit Gamma/trig/hyperbolic expansion."""
    specfun.check_window(sigma, rho)
    if rho < 0:
        pq = pq_coefficients(sigma, -rho, mode)
        return PQCoefficients(-pq.p, pq.q)
    gr, gi, ch, sh = hyperbolic_gamma(sigma, rho, mode)
    rho_pi = rho * specfun.LOG_2PI
    c, s = math.cos(rho_pi), math.sin(rho_pi)
    a = gr * c + gi * s
    b = -gr * s + gi * c
    cs, ss = math.cos(0.5 * math.pi * sigma), math.sin(0.5 * math.pi * sigma)
    pref = 2.0 * math.exp(-sigma * specfun.LOG_2PI)
    q = pref * (a * ch * cs + b * sh * ss)
    p = pref * (b * ch * cs - a * sh * ss)
    return PQCoefficients(p, q)


def decompose(sigma: float, rho: float) -> DecompositionQuad:
    """zeta(s) and the reflected zeta(1 - s) split into real components."""
    specfun.check_window(sigma, rho)
    specfun.check_window(1.0 - sigma, rho)
    z = specfun.zeta_strip(sigma, rho)
    # zeta(1 - sigma - i rho) = conj zeta(1 - sigma + i rho)
    zref = specfun.zeta_strip(1.0 - sigma, rho)
    return DecompositionQuad(z.real, z.imag, zref.real, zref.imag)


def functional_residuals(sigma: float, rho: float, relative: bool = False,
                         mode: str = "auto") -> FunctionalResiduals:
    """Residuals of the coupled real form of the functional equation.

    With ``relative=True`` each residual is divided by
    1 + |zeta~| + |P| |zeta| + |Q| |zeta|.
    """
    d = decompose(sigma, rho)
    pq = pq_coefficients(sigma, rho, mode)
    r_i = d.zi_ref + pq.q * d.zi + pq.p * d.zr
    r_r = d.zr_ref + pq.p * d.zi - pq.q * d.zr
    if relative:
        zmag = math.hypot(d.zr, d.zi)
        scale = 1.0 + math.hypot(d.zr_ref, d.zi_ref) + (abs(pq.p) + abs(pq.q)) * zmag
        return FunctionalResiduals(r_i / scale, r_r / scale)
    return FunctionalResiduals(r_i, r_r)


def sieve_residuals(sigma: float, rho: float, mode: str = "auto") -> SieveResiduals:
    """Cleared-denominator reflection-equality sieve.

    g1 = P zeta_R + (1 + Q) zeta_I and g2 = P zeta_I + (1 - Q) zeta_R vanish
    exactly when zeta~_R = zeta_R and zeta~_I = zeta_I.
    """
    specfun.check_window(sigma, rho)
    z = specfun.zeta_strip(sigma, rho)
    pq = pq_coefficients(sigma, rho, mode)
    g1 = pq.p * z.real + (1.0 + pq.q) * z.imag
    g2 = pq.p * z.imag + (1.0 - pq.q) * z.real
    return SieveResiduals(g1, g2)


def pq_norm_closed_form(sigma: float, rho: float, mode: str = "auto") -> float:
    """(2 pi)^(1 - 2 sigma) cosh(pi rho)/pi |Gamma(s)|^2 (1 + cos(pi sigma)/cosh(pi rho))."""
    specfun.check_window(sigma, rho)
    rho = abs(rho)
    cos_ps = math.cos(math.pi * sigma)
    if use_log_space(rho, mode):
        e = math.exp(-math.pi * rho)
        # log(cosh(pi rho) + cos(pi sigma))
        log_hyp = math.pi * rho + math.log(0.5 * (1.0 + e * e) + cos_ps * e)
        log_val = (
            (1.0 - 2.0 * sigma) * specfun.LOG_2PI
            - math.log(math.pi)
            + 2.0 * specfun.log_abs_gamma(sigma, rho)
            + log_hyp
        )
        return math.exp(log_val)
    try:
        ch = math.cosh(math.pi * rho)
    except OverflowError as exc:
        raise EvaluationError(f"cosh(pi*rho) overflows binary64 at rho={rho}") from exc
    g2 = abs(specfun.gamma_complex(sigma, rho)) ** 2
    return (2.0 * math.pi) ** (1.0 - 2.0 * sigma) * ch / math.pi * g2 * (1.0 + cos_ps / ch)


def pq_norm_residual(sigma: float, rho: float, mode: str = "auto") -> float:
    """(P^2 + Q^2) minus its closed form."""
    return pq_coefficients(sigma, rho, mode).norm2 - pq_norm_closed_form(sigma, rho, mode)
