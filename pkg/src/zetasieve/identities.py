"""Identity suites run by ``zetasieve verify`` and the acceptance tests."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from . import appendixc, critline, funceq, specfun
from ._grid import halton_points
from .errors import EvaluationError

DEFAULT_GRID = "0.05:0.95:0.5:80:200"

TOLERANCES = {
    "functional_residuals": 1e-8,
    "pq_norm_residual": 1e-9,
    "chi_cross_check": 1e-10,
    "gamma_abs_sq_imag_axis": 1e-10,
    "gamma_abs_sq_half": 1e-10,
    "gamma_abs_sq_one": 1e-10,
    "critline_dr_plus_di": 0.0,
    "critline_n_squared": 1e-9,
    "critline_dr_range": 1e-9,
    "dl_dsigma_fd": 1e-6,
}


@dataclass(frozen=True)
class GridSpec:
    sigma0: float
    sigma1: float
    rho0: float
    rho1: float
    n: int

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        parts = text.split(":")
        if len(parts) != 5:
            raise ValueError(f"grid must be s0:s1:r0:r1:n, got {text!r}")
        s0, s1, r0, r1 = (float(p) for p in parts[:4])
        n = int(parts[4])
        if n < 0 or s0 > s1 or r0 > r1 or r0 <= 0:
            raise ValueError(f"invalid grid {text!r}")
        for s in (s0, s1):
            specfun.check_window(s, r0)
        return cls(s0, s1, r0, r1, n)

    def points(self) -> list[tuple[float, float]]:
        return halton_points(self.n, (self.sigma0, self.sigma1), (self.rho0, self.rho1))

    def __str__(self) -> str:
        return f"{self.sigma0}:{self.sigma1}:{self.rho0}:{self.rho1}:{self.n}"


@dataclass
class IdentityResult:
    name: str
    n: int
    max_residual: float
    tolerance: float
    worst_point: tuple[float, float] | None = None

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance

    def as_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        d["worst_point"] = list(self.worst_point) if self.worst_point else None
        return d


def _log_sinh(x: float) -> float:
    return x + math.log1p(-math.exp(-2.0 * x)) - math.log(2.0)


def _log_cosh(x: float) -> float:
    return x + math.log1p(math.exp(-2.0 * x)) - math.log(2.0)


def _rel_from_logs(lhs: float, rhs: float) -> float:
    return abs(math.expm1(lhs - rhs))


def gamma_identity_residuals(rho: float, mode: str = "auto") -> dict[str, float]:
    """Relative residuals of the three closed forms for |Gamma(x + i rho)|^2."""
    if funceq.use_log_space(rho, mode):
        lg0 = 2.0 * specfun.log_abs_gamma(0.0, rho)
        lgh = 2.0 * specfun.log_abs_gamma(0.5, rho)
        lg1 = 2.0 * specfun.log_abs_gamma(1.0, rho)
        x = math.pi * rho
        lpi = math.log(math.pi)
        return {
            "gamma_abs_sq_imag_axis": _rel_from_logs(lg0, lpi - math.log(rho) - _log_sinh(x)),
            "gamma_abs_sq_half": _rel_from_logs(lgh, lpi - _log_cosh(x)),
            "gamma_abs_sq_one": _rel_from_logs(lg1, lpi + math.log(rho) - _log_sinh(x)),
        }
    try:
        sh, ch = math.sinh(math.pi * rho), math.cosh(math.pi * rho)
    except OverflowError as exc:
        raise EvaluationError(f"sinh/cosh(pi*rho) overflows binary64 at rho={rho}; "
                              "use log-space mode") from exc
    g0 = abs(specfun.gamma_complex(0.0, rho)) ** 2
    gh = abs(specfun.gamma_complex(0.5, rho)) ** 2
    g1 = abs(specfun.gamma_complex(1.0, rho)) ** 2
    e0 = math.pi / (rho * sh)
    eh = math.pi / ch
    e1 = math.pi * rho / sh
    return {
        "gamma_abs_sq_imag_axis": abs(g0 - e0) / e0,
        "gamma_abs_sq_half": abs(gh - eh) / eh,
        "gamma_abs_sq_one": abs(g1 - e1) / e1,
    }


def chi_cross_residual(sigma: float, rho: float, mode: str = "auto") -> float:
    """|(Q + iP) - chi(s)| / |chi(s)|."""
    pq = funceq.pq_coefficients(sigma, rho, mode)
    chi = funceq.chi_factor(sigma, rho)
    return abs(complex(pq.q, pq.p) - chi) / abs(chi)


def critline_residuals(rho: float, mode: str = "auto") -> dict[str, float]:
    f = critline.factors(rho, mode)
    return {
        "critline_dr_plus_di": abs(f.dr + f.di - 1.0),
        "critline_n_squared": abs(f.n * f.n - f.dr * f.di),
        "critline_dr_range": max(0.0, -f.dr, f.dr - 1.0, -f.di, f.di - 1.0),
    }


def dl_fd_residual(sigma: float, rho: float) -> float:
    return abs(appendixc.dl_dsigma(sigma, rho) - appendixc.l_fd_derivative(sigma, rho))


def _update(results: dict[str, IdentityResult], name: str, value: float, point) -> None:
    r = results[name]
    r.n += 1
    if r.worst_point is None or value > r.max_residual:
        r.max_residual = value
        r.worst_point = point


def run_identity_suite(grid: GridSpec, mode: str = "auto",
                       tol: float | None = None) -> list[IdentityResult]:
    """Evaluate every identity over the grid; raises EvaluationError on overflow."""
    results = {
        name: IdentityResult(name, 0, 0.0, TOLERANCES[name] if tol is None else tol)
        for name in TOLERANCES
    }
    for sigma, rho in grid.points():
        fr = funceq.functional_residuals(sigma, rho, relative=True, mode=mode)
        _update(results, "functional_residuals", max(abs(fr.r_i), abs(fr.r_r)), (sigma, rho))
        _update(results, "pq_norm_residual",
                abs(funceq.pq_norm_residual(sigma, rho, mode)), (sigma, rho))
        _update(results, "chi_cross_check", chi_cross_residual(sigma, rho, mode), (sigma, rho))
        for name, v in gamma_identity_residuals(rho, mode).items():
            _update(results, name, v, (sigma, rho))
        for name, v in critline_residuals(rho, mode).items():
            _update(results, name, v, (0.5, rho))
    for sigma, rho in appendixc.calibration_grid():
        _update(results, "dl_dsigma_fd", dl_fd_residual(sigma, rho), (sigma, rho))
    return list(results.values())
