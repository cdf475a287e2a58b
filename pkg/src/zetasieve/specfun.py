"""Complex Gamma, digamma and zeta in and around the critical strip.

All routines work in binary64.  Gamma uses Godfrey's 15-term Lanczos
coefficients (g = 607/128) in logarithmic form, so products such as
``Gamma(1/2 + i rho) * cosh(pi rho / 2)`` can be assembled without
overflow by the callers.  Zeta uses Euler-Maclaurin summation with
term-wise differentiated series for the s-derivatives.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import AccuracyError, EvaluationError, PoleError, RangeError

SIGMA_MIN = -1.0
SIGMA_MAX = 2.0
POLE_TOL = 1e-12

LOG_2PI = math.log(2.0 * math.pi)
_HALF_LOG_2PI = 0.5 * LOG_2PI

_LANCZOS_G = 607 / 128
_LANCZOS_COEF = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)

_BERNOULLI = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
    Fraction(854513, 138),
)
# B_{2k} / (2k)! for k = 1..11
_EM_COEF = tuple(float(b / math.factorial(2 * k)) for k, b in enumerate(_BERNOULLI, start=1))
_EM_ORDER = 10  # correction terms used; term 11 feeds the remainder bound
_EM_MAX_TERMS = 4000

# B_{2k} / (2k) for the digamma asymptotic series, k = 1..8
_PSI_COEF = tuple(float(b / (2 * k)) for k, b in enumerate(_BERNOULLI[:8], start=1))


@dataclass(frozen=True)
class StripPoint:
    """A point s = sigma + i rho of the working window."""

    sigma: float
    rho: float

    def __post_init__(self):
        check_window(self.sigma, self.rho)
        if self.rho < 0:
            raise RangeError(f"StripPoint requires rho >= 0, got {self.rho}")

    @property
    def s(self) -> complex:
        return complex(self.sigma, self.rho)


@dataclass(frozen=True)
class EvalAccuracy:
    abs_tol: float
    achieved_bound: float

    @property
    def ok(self) -> bool:
        return self.achieved_bound <= self.abs_tol


def check_window(sigma: float, rho: float) -> None:
    if not (math.isfinite(sigma) and math.isfinite(rho)):
        raise RangeError(f"non-finite coordinates ({sigma}, {rho})")
    if not SIGMA_MIN <= sigma <= SIGMA_MAX:
        raise RangeError(f"sigma={sigma} outside working window [{SIGMA_MIN}, {SIGMA_MAX}]")


def _check_gamma_pole(z: complex) -> None:
    k = round(z.real)
    if k <= 0 and abs(z - k) < POLE_TOL:
        raise PoleError(f"Gamma/digamma pole at s={k}")


def _finite(z: complex, what: str) -> complex:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise EvaluationError(f"{what} is not finite")
    return z


def _log_sin_pi(z: complex) -> complex:
    """log(sin(pi z)) that stays finite for large |Im z|."""
    if z.imag < 0:
        return _log_sin_pi(z.conjugate()).conjugate()
    # sin(pi z) = (i/2) exp(-i pi z) (1 - exp(2 i pi z)); |exp(2 i pi z)| <= 1 here
    return complex(-math.log(2.0), math.pi / 2) - 1j * math.pi * z + cmath.log(
        1.0 - cmath.exp(2j * math.pi * z)
    )


def loggamma(z: complex) -> complex:
    """A branch of log Gamma(z); only ``exp`` and the real part are branch-free."""
    z = complex(z)
    _check_gamma_pole(z)
    if z.real < 0.5:
        return complex(math.log(math.pi)) - _log_sin_pi(z) - loggamma(1.0 - z)
    zm = z - 1.0
    acc = _LANCZOS_COEF[0]
    for i in range(len(_LANCZOS_COEF) - 1, 0, -1):
        acc += _LANCZOS_COEF[i] / (zm + i)
    t = zm + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (zm + 0.5) * cmath.log(t) - t + cmath.log(acc)


def log_abs_gamma(sigma: float, rho: float) -> float:
    """log |Gamma(sigma + i rho)|."""
    return loggamma(complex(sigma, rho)).real


def gamma_complex(sigma: float, rho: float) -> complex:
    """Gamma(sigma + i rho) with relative error below 1e-12 for |s| <= 200."""
    check_window(sigma, rho)
    z = complex(sigma, rho)
    if rho == 0.0 and sigma > 0 and sigma == int(sigma):
        return complex(math.factorial(int(sigma) - 1))
    return _finite(cmath.exp(loggamma(z)), "Gamma")


def digamma_complex(sigma: float, rho: float) -> complex:
    """psi(sigma + i rho) by upward recurrence to Re >= 10 and the asymptotic series."""
    check_window(sigma, rho)
    if rho < 0:
        return digamma_complex(sigma, -rho).conjugate()
    z = complex(sigma, rho)
    _check_gamma_pole(z)
    shift = 0j
    while z.real < 10.0:
        shift -= 1.0 / z
        z += 1.0
    w2 = 1.0 / (z * z)
    series = 0j
    wk = w2
    for c in _PSI_COEF:
        series += c * wk
        wk *= w2
    return shift + cmath.log(z) - 0.5 / z - series


def _em_terms(s: complex, order: int, n: int):
    """Euler-Maclaurin pieces for zeta(s) and its s-derivatives up to ``order``.

    Returns (values, first_omitted) where both are lists indexed by
    derivative order.
    """
    log_n = math.log(n)
    re_parts = [[] for _ in range(order + 1)]
    im_parts = [[] for _ in range(order + 1)]
    for k in range(1, n):
        lk = math.log(k)
        term = cmath.exp(-s * lk)
        for d in range(order + 1):
            re_parts[d].append(term.real)
            im_parts[d].append(term.imag)
            term *= -lk

    # N^(1-s)/(s-1) and N^(-s)/2
    g = cmath.exp((1.0 - s) * log_n)
    h = 1.0 / (s - 1.0)
    tail = [g * h]
    if order >= 1:
        tail.append(g * (-log_n * h - h * h))
    if order >= 2:
        tail.append(g * (log_n**2 * h + 2.0 * log_n * h * h + 2.0 * h**3))
    half = 0.5 * cmath.exp(-s * log_n)
    for d in range(order + 1):
        t = tail[d] + half * (-log_n) ** d
        re_parts[d].append(t.real)
        im_parts[d].append(t.imag)

    # Bernoulli corrections c_k p_k(s) N^(-s-2k+1), p_k = s (s+1) ... (s+2k-2)
    p, dp, ddp = 1.0 + 0j, 0j, 0j
    j = 0
    omitted = None
    for k in range(1, _EM_ORDER + 2):
        top = 2 * k - 2
        while j <= top:
            p, dp, ddp = p * (s + j), dp * (s + j) + p, ddp * (s + j) + 2.0 * dp
            j += 1
        e = _EM_COEF[k - 1] * cmath.exp((-s - 2 * k + 1) * log_n)
        derivs = [p * e]
        if order >= 1:
            derivs.append((dp - log_n * p) * e)
        if order >= 2:
            derivs.append((ddp - 2.0 * log_n * dp + log_n**2 * p) * e)
        if k > _EM_ORDER:
            omitted = derivs
            break
        for d in range(order + 1):
            re_parts[d].append(derivs[d].real)
            im_parts[d].append(derivs[d].imag)

    values = [complex(math.fsum(re_parts[d]), math.fsum(im_parts[d])) for d in range(order + 1)]
    return values, omitted


def zeta_with_bound(sigma: float, rho: float, order: int = 0, abs_tol: float = 1e-12):
    """zeta(s) and its s-derivatives up to ``order`` with an a posteriori bound.

    Direct-sum length starts at max(20, ceil(2 + |rho|/2)) and grows until
    the remainder bound (first omitted correction term scaled by
    |s + 2K + 1| / (sigma + 2K + 1)) is at most ``abs_tol``.  Returns
    ``(values, EvalAccuracy)``; values[d] is the d-th s-derivative.
    """
    check_window(sigma, rho)
    if order not in (0, 1, 2):
        raise ValueError("order must be 0, 1 or 2")
    if rho < 0:
        values, acc = zeta_with_bound(sigma, -rho, order, abs_tol)
        return [v.conjugate() for v in values], acc
    s = complex(sigma, rho)
    if abs(s - 1.0) < POLE_TOL:
        raise PoleError("zeta pole at s=1")
    scale = abs(s + 2 * _EM_ORDER + 1) / (sigma + 2 * _EM_ORDER + 1)
    n = max(20, math.ceil(2 + abs(rho) / 2))
    while True:
        values, omitted = _em_terms(s, order, n)
        bound = scale * max(abs(t) for t in omitted)
        if bound <= abs_tol:
            break
        if n >= _EM_MAX_TERMS:
            raise AccuracyError(
                f"zeta({s}) bound {bound:.3g} exceeds {abs_tol:.3g} with {n} terms"
            )
        n = min(_EM_MAX_TERMS, math.ceil(n * 1.25))
    for v in values:
        _finite(v, "zeta")
    return values, EvalAccuracy(abs_tol, bound)


def zeta_strip(sigma: float, rho: float, abs_tol: float = 1e-12) -> complex:
    """zeta(sigma + i rho) to absolute accuracy ``abs_tol``."""
    return zeta_with_bound(sigma, rho, 0, abs_tol)[0][0]


def zeta_rho_deriv(sigma: float, rho: float, m: int, abs_tol: float = 1e-12) -> complex:
    """m-th partial derivative of zeta(sigma + i rho) with respect to rho.

    d/drho = i d/ds, so m=1 gives i zeta'(s) and m=2 gives -zeta''(s).
    Real/imaginary parts are (d^m zeta_R, d^m zeta_I).
    """
    if m not in (1, 2):
        raise ValueError("m must be 1 or 2")
    values, _ = zeta_with_bound(sigma, rho, m, abs_tol)
    return (1j) ** m * values[m]
