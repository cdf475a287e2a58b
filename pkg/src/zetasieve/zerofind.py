"""Sign-change scanning, root refinement and zero classification on sigma = 1/2."""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from scipy.optimize import brentq

from . import critline, specfun
from .errors import NoConvergenceError, NonFiniteSampleError, ZetaSieveError

log = logging.getLogger(__name__)

MAX_ITER = 200


class ZeroKind(str, enum.Enum):
    HALF_ZERO_OF_ZETA_R = "HalfZeroOfZetaR"
    HALF_ZERO_OF_ZETA_I = "HalfZeroOfZetaI"
    FULL_ZERO = "FullZero"
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class ScanConfig:
    rho_min: float
    rho_max: float
    step: float = 0.05
    refine_tol: float = 1e-12
    classify_tol: float = 1e-6

    def __post_init__(self):
        if not (0 < self.rho_min <= self.rho_max):
            raise ValueError(f"need 0 < rho_min <= rho_max, got [{self.rho_min}, {self.rho_max}]")
        if not 0 < self.step <= 0.25:
            raise ValueError(f"step must be in (0, 0.25], got {self.step}")
        if self.refine_tol < 1e-13:
            raise ValueError(f"refine_tol must be >= 1e-13, got {self.refine_tol}")
        if not self.classify_tol > 0:
            raise ValueError("classify_tol must be positive")

    def grid(self) -> list[float]:
        """Uniform grid from rho_min to rho_max with spacing <= step."""
        width = self.rho_max - self.rho_min
        if width == 0:
            return [self.rho_min]
        n = max(1, math.ceil(width / self.step - 1e-9))
        return [self.rho_min + width * i / n for i in range(n)] + [self.rho_max]


@dataclass(frozen=True)
class ZeroRecord:
    rho: float
    kind: ZeroKind
    residual: float
    zeta_mag: float
    bracket: tuple[float, float]
    iterations: int
    source: str = ""

    def as_row(self) -> dict:
        return {
            "rho": self.rho,
            "kind": self.kind.value,
            "residual": self.residual,
            "zeta_mag": self.zeta_mag,
            "bracket_lo": self.bracket[0],
            "bracket_hi": self.bracket[1],
            "iterations": self.iterations,
        }

    def as_json(self) -> dict:
        d = self.as_row()
        d["source"] = self.source
        return d


class RefinedRoot(NamedTuple):
    rho: float
    residual: float
    iterations: int


@dataclass
class CampaignResult:
    records: list[ZeroRecord]
    failures: list[tuple[str, tuple[float, float], str]] = field(default_factory=list)


def _sample(target: Callable[[float], float], x: float) -> float:
    v = target(x)
    if not math.isfinite(v):
        raise NonFiniteSampleError(f"target returned {v} at rho={x}")
    return v


def scan_brackets(cfg: ScanConfig, target: Callable[[float], float]) -> list[tuple[float, float]]:
    """Every consecutive grid pair with a strict sign change, ascending in rho.

    A sample that is exactly zero is returned as a degenerate bracket (x, x).
    """
    grid = cfg.grid()
    if len(grid) < 2:
        return []
    values = [_sample(target, x) for x in grid]
    out = []
    for i, (x, v) in enumerate(zip(grid, values)):
        if v == 0.0:
            out.append((x, x))
        elif i + 1 < len(grid) and v * values[i + 1] < 0:
            out.append((x, grid[i + 1]))
    return out


def refine_root(bracket: tuple[float, float], target: Callable[[float], float],
                tol: float) -> RefinedRoot:
    """Brent's method (bisection/secant/inverse-quadratic) down to width ``tol``."""
    a, b = bracket
    if a == b:
        return RefinedRoot(a, abs(target(a)), 0)
    root, info = brentq(target, a, b, xtol=tol, maxiter=MAX_ITER, full_output=True, disp=False)
    if not info.converged:
        raise NoConvergenceError(f"no convergence in {bracket} after {info.iterations} iterations")
    return RefinedRoot(root, abs(target(root)), info.iterations)


def classify(rho: float, cfg: ScanConfig) -> ZeroKind:
    z = specfun.zeta_strip(0.5, rho)
    return _kind_from_zeta(z, cfg.classify_tol)


def _kind_from_zeta(z: complex, tol: float) -> ZeroKind:
    r_small, i_small = abs(z.real) <= tol, abs(z.imag) <= tol
    if r_small and i_small and abs(z) <= tol:
        return ZeroKind.FULL_ZERO
    if r_small and not i_small:
        return ZeroKind.HALF_ZERO_OF_ZETA_R
    if i_small and not r_small:
        return ZeroKind.HALF_ZERO_OF_ZETA_I
    return ZeroKind.UNCLASSIFIED


def default_targets() -> dict[str, Callable[[float], float]]:
    return {
        "half_zero": critline.half_zero_function,
        "full_zero": lambda rho: critline.full_zero_function(rho, 1),
    }


def run_campaign_detailed(cfg: ScanConfig, targets=None) -> CampaignResult:
    """Scan, refine and classify roots of every target; failures are collected."""
    targets = default_targets() if targets is None else targets
    result = CampaignResult(records=[])
    if cfg.rho_min == cfg.rho_max:
        return result
    found = []
    for name, target in targets.items():
        for bracket in scan_brackets(cfg, target):
            try:
                root = refine_root(bracket, target, cfg.refine_tol)
                z = specfun.zeta_strip(0.5, root.rho)
            except ZetaSieveError as exc:
                log.warning("bracket %s of %s failed: %s", bracket, name, exc)
                result.failures.append((name, bracket, str(exc)))
                continue
            found.append(ZeroRecord(
                rho=root.rho,
                kind=_kind_from_zeta(z, cfg.classify_tol),
                residual=root.residual,
                zeta_mag=abs(z),
                bracket=bracket,
                iterations=root.iterations,
                source=name,
            ))
    found.sort(key=lambda r: (r.rho, r.source))
    merge_tol = 10 * cfg.refine_tol
    for rec in found:
        if result.records and rec.rho - result.records[-1].rho <= merge_tol:
            continue
        result.records.append(rec)
    return result


def run_campaign(cfg: ScanConfig, targets=None) -> list[ZeroRecord]:
    return run_campaign_detailed(cfg, targets).records


def full_zeros(records: list[ZeroRecord]) -> list[ZeroRecord]:
    return [r for r in records if r.kind is ZeroKind.FULL_ZERO]
