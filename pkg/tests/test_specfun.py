import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cavityspin.specfun import (SpecFunConfig, bessel_j, bessel_j_deriv, bessel_j_series,
                                bessel_k, bessel_k_deriv)

from oracles import j_series, k_integral


def test_origin_values():
    assert bessel_j(0, 0.0) == 1.0
    assert bessel_j(1, 0.0) == 0.0
    assert bessel_j(5, 0.0) == 0.0


def test_first_zero_of_j0():
    assert abs(bessel_j(0, 2.404825557695773)) < 1e-12


def test_j0_at_reference_cavity_argument():
    # series oracle: 0.272813766968198
    assert math.isclose(bessel_j(0, 1.9155), j_series(0, 1.9155), rel_tol=1e-13)
    assert math.isclose(bessel_j(0, 1.9155), 0.2728, abs_tol=5e-5)


@pytest.mark.parametrize("x, expected", [(1.0, 0.42102443824070833), (3.6234, 0.0170426766252412)])
def test_k0_against_integral_representation(x, expected):
    assert math.isclose(k_integral(0, x), expected, rel_tol=1e-14)
    assert math.isclose(bessel_k(0, x), expected, rel_tol=1e-13)


def test_k1_small_argument():
    assert math.isclose(bessel_k(1, 1e-6) * 1e-6, 1.0, rel_tol=1e-4)


@pytest.mark.parametrize("l", range(0, 6))
@pytest.mark.parametrize("x", [0.05, 0.5, 1.0, 2.5, 5.0, 9.0])
def test_j_against_series_oracle(l, x):
    assert bessel_j(l, x) == pytest.approx(j_series(l, x), rel=1e-12, abs=1e-15)


@pytest.mark.parametrize("l", range(0, 5))
@pytest.mark.parametrize("x", [0.01, 0.3, 1.0, 3.6, 10.0, 30.0])
def test_k_against_integral_oracle(l, x):
    assert bessel_k(l, x) == pytest.approx(k_integral(l, x), rel=1e-12)


def test_in_package_series_matches_wrapped_evaluator():
    cfg = SpecFunConfig()
    for l in range(4):
        for x in np.linspace(0, l + 12, 25):
            assert bessel_j_series(l, x, cfg) == pytest.approx(bessel_j(l, x), rel=1e-9, abs=1e-12)


def test_derivative_identities():
    for x in [0.0, 0.3, 1.7, 4.0]:
        assert bessel_j_deriv(0, x) == -bessel_j(1, x)
    for x in [0.3, 1.7, 4.0]:
        assert bessel_k_deriv(0, x) == -bessel_k(1, x)
    # J_1'(2) = J_0(2) - J_1(2)/2; finite difference of the series: -0.0644716247372
    assert bessel_j_deriv(1, 2.0) == pytest.approx(-0.0644716247372, rel=1e-10)
    assert bessel_j_deriv(1, 2.0) == pytest.approx(bessel_j(0, 2.0) - bessel_j(1, 2.0) / 2, rel=1e-14)


def test_domain_errors():
    with pytest.raises(ValueError):
        bessel_j(0, -1.0)
    with pytest.raises(ValueError):
        bessel_j(-1, 1.0)
    with pytest.raises(ValueError):
        bessel_j(0, float("nan"))
    with pytest.raises(ValueError):
        bessel_k(0, 0.0)
    with pytest.raises(ValueError):
        bessel_k(1, -2.0)
    with pytest.raises(OverflowError):
        bessel_k(200, 1e-6)
    with pytest.raises(ValueError):
        SpecFunConfig(target_rel_error=1e-6)
    with pytest.raises(ValueError):
        SpecFunConfig(series_term_cap=10)


X_GRID = np.linspace(0.1, 50, 400)


@pytest.mark.parametrize("l", range(1, 11))
def test_j_recurrence_residual(l):
    jm, j0, jp = bessel_j(l - 1, X_GRID), bessel_j(l, X_GRID), bessel_j(l + 1, X_GRID)
    res = np.abs(jp - 2 * l / X_GRID * j0 + jm)
    assert np.all(res < 1e-10 * np.maximum(1.0, np.abs(j0)))


@pytest.mark.parametrize("l", range(1, 11))
def test_k_recurrence_residual(l):
    km, k0, kp = bessel_k(l - 1, X_GRID), bessel_k(l, X_GRID), bessel_k(l + 1, X_GRID)
    res = np.abs(kp - 2 * l / X_GRID * k0 - km)
    assert np.all(res < 1e-10 * k0)


@pytest.mark.parametrize("l", range(0, 6))
def test_derivatives_match_central_differences(l):
    h = 1e-5
    for x in np.geomspace(0.05, 40, 30):
        fd = (bessel_j(l, x + h) - bessel_j(l, x - h)) / (2 * h)
        assert bessel_j_deriv(l, x) == pytest.approx(fd, rel=1e-6, abs=1e-9)
        fd = (bessel_k(l, x + h) - bessel_k(l, x - h)) / (2 * h)
        assert bessel_k_deriv(l, x) == pytest.approx(fd, rel=1e-6)


@pytest.mark.parametrize("l", range(0, 6))
def test_k_positive_decreasing_log_convex(l):
    x = np.geomspace(0.05, 60, 300)
    k = bessel_k(l, x)
    assert np.all(k > 0)
    assert np.all(np.diff(k) < 0)
    logk = np.log(k)
    # log-convexity on a non-uniform grid: slopes increase
    slopes = np.diff(logk) / np.diff(x)
    assert np.all(np.diff(slopes) > -1e-10)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=10), st.floats(min_value=0.1, max_value=50))
def test_j_recurrence_property(l, x):
    r = bessel_j(l + 1, x) - 2 * l / x * bessel_j(l, x) + bessel_j(l - 1, x)
    assert abs(r) < 1e-10 * max(1.0, abs(bessel_j(l, x)))


def test_vectorized_and_scalar_agree():
    x = np.array([0.5, 1.5, 3.0])
    assert np.allclose(bessel_j(2, x), [bessel_j(2, v) for v in x], rtol=0, atol=0)
    assert isinstance(bessel_k(0, 1.0), float)
