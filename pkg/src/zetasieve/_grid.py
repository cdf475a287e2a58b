"""Deterministic low-discrepancy sample grids."""

from __future__ import annotations


def radical_inverse(i: int, base: int) -> float:
    inv, f = 0.0, 1.0 / base
    while i:
        i, digit = divmod(i, base)
        inv += digit * f
        f /= base
    return inv


def halton_points(n: int, sigma_range: tuple[float, float],
                  rho_range: tuple[float, float]) -> list[tuple[float, float]]:
    """n (sigma, rho) points from the base-(2, 3) Halton sequence."""
    s0, s1 = sigma_range
    r0, r1 = rho_range
    return [
        (s0 + (s1 - s0) * radical_inverse(i, 2), r0 + (r1 - r0) * radical_inverse(i, 3))
        for i in range(1, n + 1)
    ]
