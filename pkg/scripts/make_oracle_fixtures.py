#!/usr/bin/env python3
"""Regenerate tests/fixtures/oracle.json with 30-digit mpmath arithmetic.

The package itself never imports mpmath; this script is the independent
high-precision side of the golden tests.  Zeros are located by a
sign-change scan of Hardy's Z on a 0.01 grid followed by bracketed
refinement, then cross-checked against mpmath.zetazero.

    python scripts/make_oracle_fixtures.py [--out tests/fixtures/oracle.json]
"""

from __future__ import annotations

import argparse
import json
import random
from pathlib import Path

import mpmath as mp

DPS = 30


def s(x) -> str:
    return mp.nstr(x, DPS, strip_zeros=False)


def c(z) -> list[str]:
    z = mp.mpc(z)
    return [s(z.real), s(z.imag)]


def scan_roots(f, lo, hi, step):
    """Bracket sign changes of a real mp function on a uniform grid and refine."""
    n = int(mp.nint((hi - lo) / step))
    xs = [mp.mpf(lo) + (mp.mpf(hi) - lo) * i / n for i in range(n + 1)]
    vals = [f(x) for x in xs]
    roots = []
    for a, b, fa, fb in zip(xs, xs[1:], vals, vals[1:]):
        if fa * fb < 0:
            roots.append(mp.findroot(f, (a, b), solver="anderson"))
    return roots


def zeros_section(lo=10, hi=100):
    roots = scan_roots(mp.siegelz, lo, hi, mp.mpf("0.01"))
    reference = []
    n = 1
    while True:
        t = mp.zetazero(n).imag
        if t >= hi:
            break
        if t > lo:
            reference.append(t)
        n += 1
    assert len(roots) == len(reference), (len(roots), len(reference))
    for a, b in zip(roots, reference):
        assert abs(a - b) < mp.mpf("1e-25"), (a, b)
    gaps = [b - a for a, b in zip(roots, roots[1:])]
    return {"range": [lo, hi], "count": len(roots), "zeros": [s(t) for t in roots],
            "min_gap": s(min(gaps))}


def half_zero_section(lo=10, hi=100):
    re_roots = scan_roots(lambda t: mp.re(mp.zeta(mp.mpc(0.5, t))), lo, hi, mp.mpf("0.01"))
    im_roots = scan_roots(lambda t: mp.im(mp.zeta(mp.mpc(0.5, t))), lo, hi, mp.mpf("0.01"))
    # Im zeta sign changes include the full zeros; keep only Gram-type points
    zs = [mp.zetazero(n).imag for n in range(1, 40)]
    gram = [t for t in im_roots if min(abs(t - z) for z in zs) > mp.mpf("1e-10")]
    re_only = [t for t in re_roots if min(abs(t - z) for z in zs) > mp.mpf("1e-10")]
    return {"range": [lo, hi], "zeta_r_half_zeros": [s(t) for t in re_only],
            "zeta_i_half_zeros": [s(t) for t in gram]}


def point_values():
    out = {}
    out["zeta_2"] = s(mp.zeta(2))
    out["zeta_0"] = s(mp.zeta(0))
    out["zeta_prime_2"] = s(mp.zeta(2, derivative=1))
    out["digamma_1"] = s(mp.digamma(1))
    out["digamma_half"] = s(mp.digamma(mp.mpf(1) / 2))
    out["abs_gamma_half_1_sq"] = s(mp.pi / mp.cosh(mp.pi))
    out["first_zero"] = s(mp.zetazero(1).imag)
    out["zero_21"] = s(mp.zetazero(2).imag)
    out["gram_0"] = s(mp.findroot(lambda t: mp.siegeltheta(t), 17.8))

    sp = mp.mpc("0.3", 10)
    z, zr = mp.zeta(sp), mp.zeta(mp.mpc("0.7", 10))
    out["decompose_0.3_10"] = {"zr": s(z.real), "zi": s(z.imag), "zr_ref": s(zr.real),
                               "zi_ref": s(zr.imag)}

    s3 = mp.mpc("0.25", 3)
    chi = 2 * mp.gamma(s3) * mp.cos(mp.pi * s3 / 2) * (2 * mp.pi) ** (-s3)
    out["chi_0.25_3"] = c(chi)

    g = mp.gamma(mp.mpc("0.5", 20))
    ch, sh = mp.cosh(mp.pi * 10), mp.sinh(mp.pi * 10)
    cp, cm = ch * g.real + sh * g.imag, -sh * g.real + ch * g.imag
    rp = 20 * mp.log(2 * mp.pi)
    out["factors_20"] = {
        "cp": s(cp), "cm": s(cm),
        "n": s((cp * mp.sin(rp) - cm * mp.cos(rp)) / (2 * mp.sqrt(mp.pi))),
        "dr": s(mp.mpf(1) / 2 - (cp * mp.cos(rp) + cm * mp.sin(rp)) / (2 * mp.sqrt(mp.pi))),
    }

    s9 = mp.mpc("0.9", 50)
    chi9 = 2 * mp.gamma(s9) * mp.cos(mp.pi * s9 / 2) * (2 * mp.pi) ** (-s9)
    closed = ((2 * mp.pi) ** (1 - 2 * mp.mpf("0.9")) * mp.cosh(50 * mp.pi) / mp.pi
              * abs(mp.gamma(s9)) ** 2 * (1 + mp.cos(mp.pi * mp.mpf("0.9")) / mp.cosh(50 * mp.pi)))
    out["pq_norm_0.9_50"] = {"p2q2": s(abs(chi9) ** 2), "closed": s(closed)}
    return out


def random_grid(n=60, seed=20091031):
    rng = random.Random(seed)
    rows = []
    for _ in range(n):
        sigma = rng.uniform(0.05, 0.95)
        rho = rng.uniform(0.5, 120.0)
        sp = mp.mpc(sigma, rho)
        rows.append({
            "sigma": repr(sigma), "rho": repr(rho),
            "gamma": c(mp.gamma(sp)),
            "digamma": c(mp.digamma(sp)),
            "zeta": c(mp.zeta(sp)),
            "zeta_d1": c(mp.zeta(sp, derivative=1)),
            "zeta_d2": c(mp.zeta(sp, derivative=2)),
        })
    return rows


def gamma_edge_grid():
    """Gamma on the wider window |s| <= 200, including sigma < 1/2 (reflection)."""
    rng = random.Random(7)
    rows = []
    for _ in range(40):
        sigma = rng.uniform(-0.95, 2.0)
        rho = rng.uniform(0.01, 199.0)
        rows.append({"sigma": repr(sigma), "rho": repr(rho),
                     "gamma": c(mp.gamma(mp.mpc(sigma, rho)))})
    return rows


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    default = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "oracle.json"
    parser.add_argument("--out", type=Path, default=default)
    args = parser.parse_args()
    mp.mp.dps = DPS + 10
    payload = {
        "generator": "scripts/make_oracle_fixtures.py",
        "mpmath_version": mp.__version__,
        "dps": DPS,
        "critical_line_zeros": zeros_section(),
        "critical_line_zeros_10_30": zeros_section(10, 30),
        "half_zeros": half_zero_section(),
        "points": point_values(),
        "grid": random_grid(),
        "gamma_grid": gamma_edge_grid(),
    }
    args.out.write_text(json.dumps(payload, indent=1) + "\n", encoding="utf-8")
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
