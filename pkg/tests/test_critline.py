from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import brentq

from conftest import ORACLE
from zetasieve import critline, funceq, specfun
from zetasieve.errors import RangeError

POINTS = ORACLE["points"]
ZEROS = [float(t) for t in ORACLE["critical_line_zeros"]["zeros"]]
HALF_R = [float(t) for t in ORACLE["half_zeros"]["zeta_r_half_zeros"]]
HALF_I = [float(t) for t in ORACLE["half_zeros"]["zeta_i_half_zeros"]]


def _roots(f, lo, hi, step=0.02):
    n = round((hi - lo) / step)
    xs = [lo + (hi - lo) * i / n for i in range(n + 1)]
    vs = [f(x) for x in xs]
    return [brentq(f, a, b, xtol=1e-13) for a, b, fa, fb in zip(xs, xs[1:], vs, vs[1:])
            if fa * fb < 0]


def test_factors_match_oracle_at_20():
    ref = POINTS["factors_20"]
    f = critline.factors(20.0)
    for name in ("cp", "cm", "n", "dr"):
        assert getattr(f, name) == pytest.approx(float(ref[name]), abs=1e-10)


@pytest.mark.parametrize("mode", funceq.MODES)
@pytest.mark.parametrize("rho", [1.0, 10.0, 29.9, 60.0, 100.0])
def test_factor_identities(rho, mode):
    f = critline.factors(rho, mode)
    assert f.dr + f.di == 1.0
    assert abs(f.n * f.n - f.dr * f.di) <= 1e-10
    assert -1e-9 <= f.dr <= 1 + 1e-9


@settings(max_examples=80, deadline=None)
@given(st.floats(0.1, 150.0))
def test_factors_are_chi_components(rho):
    # on sigma = 1/2: D_R = (1 - Q)/2 and N = -P/2
    f = critline.factors(rho)
    pq = funceq.pq_coefficients(0.5, rho)
    assert f.dr == pytest.approx(0.5 * (1.0 - pq.q), abs=1e-12)
    assert f.n == pytest.approx(-0.5 * pq.p, abs=1e-12)


@pytest.mark.parametrize("bad", [0.0, -1.0, math.inf])
def test_rho_must_be_positive(bad):
    with pytest.raises(RangeError):
        critline.factors(bad)
    with pytest.raises(RangeError):
        critline.half_zero_function(bad)
    with pytest.raises(RangeError):
        critline.full_zero_function(bad)


def test_full_zero_function_order_checked():
    with pytest.raises(ValueError):
        critline.full_zero_function(10.0, 3)


@pytest.mark.parametrize("rho", ZEROS[:6] + ZEROS[-3:])
def test_full_zero_function_vanishes_at_zeros(rho):
    assert abs(critline.full_zero_function(rho, 1)) < 1e-11


def test_first_zero_is_root():
    rho = float(POINTS["first_zero"])
    assert abs(critline.full_zero_function(rho, 1)) < 1e-12
    # not a root of the half-zero function
    assert abs(critline.half_zero_function(rho)) > 1e-2
    f = critline.factors(rho)
    assert abs(f.n * f.n - f.dr * f.di) < 1e-12


def test_half_zero_roots_are_the_half_zeros():
    roots = _roots(critline.half_zero_function, 10.0, 100.0)
    expected = sorted(HALF_R + HALF_I)
    assert len(roots) == len(expected)
    for got, ref in zip(roots, expected):
        assert got == pytest.approx(ref, abs=1e-9)


def test_first_half_zero_above_17():
    roots = _roots(critline.half_zero_function, 17.0, 18.5)
    assert roots[0] == pytest.approx(float(POINTS["gram_0"]), abs=1e-9)
    assert roots[0] == pytest.approx(17.8456, abs=1e-4)


def test_half_zero_classification_and_alternation():
    kinds = []
    for rho in _roots(critline.half_zero_function, 10.0, 100.0):
        f = critline.factors(rho)
        z = specfun.zeta_strip(0.5, rho)
        # D_R = 0 forces zeta_I = 0; D_I = 0 forces zeta_R = 0
        if f.dr < 1e-6:
            assert abs(z.imag) < 1e-6 and abs(z.real) > 1e-3
            kinds.append("I")
        else:
            assert f.di < 1e-6
            assert abs(z.real) < 1e-6 and abs(z.imag) > 1e-3
            kinds.append("R")
    assert all(a != b for a, b in zip(kinds, kinds[1:]))


def test_full_zero_roots_contain_every_zero():
    roots = _roots(lambda r: critline.full_zero_function(r, 1), 10.0, 100.0, step=0.05)
    for z in ZEROS:
        assert min(abs(r - z) for r in roots) < 1e-9


@settings(max_examples=40, deadline=None)
@given(st.floats(1.0, 80.0))
def test_full_zero_function_is_theta_prime_times_zeta_i(rho):
    # N d zeta_I - D_R d zeta_R = -theta'(rho) zeta_I on the critical line
    h = 1e-5
    theta = lambda r: (specfun.loggamma(complex(0.25, 0.5 * r)).imag  # noqa: E731
                       - 0.5 * r * math.log(math.pi))
    dtheta = (theta(rho + h) - theta(rho - h)) / (2 * h)
    zi = specfun.zeta_strip(0.5, rho).imag
    assert critline.full_zero_function(rho, 1) == pytest.approx(-dtheta * zi, abs=1e-8)


def test_modes_agree_for_half_zero_function():
    for rho in (2.0, 11.0, 29.0):
        a = critline.half_zero_function(rho, "direct")
        b = critline.half_zero_function(rho, "log")
        assert a == pytest.approx(b, abs=1e-12)


def test_half_zero_function_is_order_one_at_large_rho():
    vals = [abs(critline.half_zero_function(r)) for r in (150.0, 300.0, 600.0)]
    assert all(0.0 < v < 10.0 for v in vals)


def test_asymptotic_ratio_gap_shrinks():
    far = critline.asymptotic_ratio(30.0)
    near = critline.asymptotic_ratio(2.0)
    assert not far.pole_proximity
    gap30 = abs(far.exact - far.stirling_approx)
    gap2 = abs(near.exact - near.stirling_approx)
    assert gap30 < 0.05
    assert gap2 > gap30


def test_asymptotic_ratio_rearrangement_holds_at_half_zero():
    rho = _roots(critline.half_zero_function, 29.5, 30.5)[0]
    r = critline.asymptotic_ratio(rho)
    assert r.exact == pytest.approx(r.tan_sum, rel=1e-9)


def test_asymptotic_ratio_requires_rho_above_one():
    with pytest.raises(RangeError):
        critline.asymptotic_ratio(1.0)


def test_asymptotic_ratio_flags_poles():
    # tan(rho_pi) has a pole where rho log(2 pi) = pi/2
    rho = 0.5 * math.pi / specfun.LOG_2PI + math.pi / specfun.LOG_2PI
    assert critline.asymptotic_ratio(rho).pole_proximity


def test_second_order_roots_are_never_zeros_of_zeta():
    # weaker observation that does hold: no root of the m = 2 function is a zero of zeta
    roots = _roots(lambda r: critline.full_zero_function(r, 2), 0.05, 100.0, step=0.05)
    assert len(roots) > 0
    assert min(abs(specfun.zeta_strip(0.5, r)) for r in roots) > 1e-3
