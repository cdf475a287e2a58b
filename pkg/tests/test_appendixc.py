from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetasieve import appendixc
from zetasieve.errors import NoRootError, RangeError

TWO_PI = 2 * math.pi


@settings(max_examples=60)
@given(st.floats(0.01, 150.0))
def test_l_vanishes_on_critical_line(rho):
    assert appendixc.l_function(0.5, rho) == 0.0


@pytest.mark.parametrize("rho", [0.5, 1.0, 2.0, 6.0, 17.3, 50.0])
def test_endpoint_closed_forms(rho):
    l0, l1 = appendixc.l_endpoints(rho)
    assert appendixc.l_function(0.0, rho) == pytest.approx(l0, abs=1e-10)
    assert appendixc.l_function(1.0, rho) == pytest.approx(l1, abs=1e-10)


def test_endpoint_limits():
    assert appendixc.l_endpoints(1e-3)[1] == pytest.approx(2 * math.pi**2 - 1, abs=1e-4)
    assert appendixc.l_endpoints(1e-6)[0] == pytest.approx(-1.0, abs=1e-9)
    assert -1.0 < appendixc.l_endpoints(50.0)[1] < -0.8
    l0s = [appendixc.l_endpoints(r)[0] for r in (5.0, 10.0, 20.0, 40.0)]
    l1s = [appendixc.l_endpoints(r)[1] for r in (5.0, 10.0, 20.0, 40.0)]
    assert l0s == sorted(l0s) and l1s == sorted(l1s, reverse=True)


def test_endpoints_reject_nonpositive_rho():
    with pytest.raises(RangeError):
        appendixc.l_endpoints(0.0)


def test_rhs_bounded_and_finite():
    assert appendixc.rhs(0.0, 0.0) == 1.0
    assert appendixc.rhs(0.3, 400.0) == 0.0
    for sigma in (0.0, 0.25, 0.5, 1.0):
        for rho in (0.1, 1.0, 6.3, 50.0):
            assert abs(appendixc.rhs(sigma, rho)) < 1.0


def test_calibration_selects_log_coefficient():
    cal = appendixc.calibrate_dl_coefficient()
    assert cal.chosen == "calibrated"
    assert cal.coefficient == appendixc.LOG_4PI2
    assert cal.calibrated_max_dev < 1e-6
    assert cal.printed_max_dev > 30.0
    assert cal.n_points == 50


def test_printed_coefficient_kept_when_it_fits(monkeypatch):
    monkeypatch.setattr(appendixc, "PRINTED_COEFFICIENT", appendixc.LOG_4PI2)
    assert appendixc.calibrate_dl_coefficient(appendixc.calibration_grid(5)).chosen == "printed"


def test_dl_dsigma_matches_finite_difference_at_reference_point():
    assert appendixc.dl_dsigma(0.3, 7.0) == pytest.approx(appendixc.l_fd_derivative(0.3, 7.0),
                                                          abs=1e-6)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.05, 0.95), st.floats(0.5, 50.0))
def test_dl_dsigma_matches_finite_difference(sigma, rho):
    fd = appendixc.l_fd_derivative(sigma, rho)
    assert appendixc.dl_dsigma(sigma, rho) == pytest.approx(fd, abs=1e-6)


@pytest.mark.parametrize("rho", [1.0, 4.0, 6.0, 7.0, 30.0])
def test_dl_sign_follows_b_on_critical_line(rho):
    assert math.copysign(1.0, appendixc.dl_dsigma(0.5, rho)) == math.copysign(
        1.0, appendixc.b_factor(0.5, rho))


def test_b_changes_sign_across_rho_s():
    assert appendixc.b_factor(0.3, 4.0) > 0 > appendixc.b_factor(0.3, 8.0)


@pytest.mark.parametrize("sigma", [0.0, 0.25, 0.5, 0.75, 1.0])
def test_b_monotone_and_sign_change_near_rho_s(sigma):
    rho_s = appendixc.find_rho_s().rho_s
    rhos = [1.0 + 0.1 * i for i in range(191)]
    b = [appendixc.b_factor(sigma, r) for r in rhos]
    assert all(x > y for x, y in zip(b, b[1:]))
    assert appendixc.b_factor(sigma, rho_s - 1.0) > 0 > appendixc.b_factor(sigma, rho_s + 1.0)


def test_rho_s():
    rs = appendixc.find_rho_s()
    assert rs.rho_s == pytest.approx(6.283185307, abs=1e-6)
    assert rs.alt_root == pytest.approx(TWO_PI, abs=1e-12)
    assert rs.bracket[0] <= rs.rho_s <= rs.bracket[1]


def test_rho_s_step_invariant():
    a = appendixc.find_rho_s().rho_s
    b = appendixc.find_rho_s(step=0.005).rho_s
    assert a == pytest.approx(b, abs=1e-12)


def test_rho_s_absent():
    with pytest.raises(NoRootError):
        appendixc.find_rho_s(lo=8.0, hi=20.0)


@pytest.mark.parametrize("sigma", [0.0, 1.0])
def test_l_changes_sign_across_rho_s(sigma):
    rho_s = appendixc.find_rho_s().rho_s
    assert appendixc.l_function(sigma, rho_s - 0.1) * appendixc.l_function(sigma, rho_s + 0.1) < 0


def test_scan_rows_layout():
    rows = appendixc.scan_rows([0.0, 0.5, 1.0], [5.0, 6.0])
    assert [(r.rho, r.sigma) for r in rows] == [(5.0, 0.0), (5.0, 0.5), (5.0, 1.0),
                                                (6.0, 0.0), (6.0, 0.5), (6.0, 1.0)]
    assert rows[1].l_value == 0.0
