from __future__ import annotations

import pytest

from zetasieve import identities
from zetasieve.errors import EvaluationError, RangeError
from zetasieve.identities import GridSpec


@pytest.fixture(scope="module")
def default_results():
    return identities.run_identity_suite(GridSpec.parse(identities.DEFAULT_GRID), mode="direct")


def test_default_grid_passes(default_results):
    assert {r.name for r in default_results} == set(identities.TOLERANCES)
    for r in default_results:
        assert r.passed, r
        assert r.max_residual < 1e-9


def test_result_serialisation(default_results):
    d = default_results[0].as_dict()
    assert set(d) == {"name", "n", "max_residual", "tolerance", "worst_point", "passed"}


@pytest.mark.parametrize("text", ["0:1:1:2", "0.5:0.2:1:2:3", "0.1:0.9:0:2:3", "a:b:c:d:e",
                                  "0.1:0.9:1:2:-1"])
def test_grid_parse_rejects(text):
    with pytest.raises(ValueError):
        GridSpec.parse(text)


def test_grid_parse_window():
    with pytest.raises(RangeError):
        GridSpec.parse("-2:0.5:1:2:3")


def test_grid_round_trip_and_points():
    g = GridSpec.parse("0.1:0.9:1:80:20")
    assert str(g) == "0.1:0.9:1.0:80.0:20"
    pts = g.points()
    assert len(pts) == 20 and len(set(pts)) == 20
    assert all(0.1 <= s <= 0.9 and 1 <= r <= 80 for s, r in pts)
    assert pts == g.points()


def test_empty_grid():
    res = identities.run_identity_suite(GridSpec.parse("0.1:0.9:1:2:0"))
    grid_driven = [r for r in res if r.name != "dl_dsigma_fd"]
    assert all(r.n == 0 and r.worst_point is None for r in grid_driven)


def test_large_rho_needs_log_space():
    grid = GridSpec.parse("0.3:0.3:250:250:1")
    with pytest.raises(EvaluationError):
        identities.run_identity_suite(grid, mode="direct")
    assert all(r.passed for r in identities.run_identity_suite(grid, mode="log"))


def test_tolerance_override_can_fail():
    res = identities.run_identity_suite(GridSpec.parse("0.1:0.9:1:50:5"), tol=1e-30)
    assert not all(r.passed for r in res)
