"""Tests for the existence-boundary curve, its endpoints, and omega*."""

import math

import numpy as np
import pytest

from tristab import (
    NonlinearityParams,
    NotOnCurve,
    endpoints,
    eval_U,
    gamma_omega_ne,
    omega_star,
    sample_curve,
)

FF234 = NonlinearityParams(2.0, 3.0, 4.0)
FD357 = NonlinearityParams(3.0, 5.0, 7.0, sign3=-1)
DF357 = NonlinearityParams(3.0, 5.0, 7.0, sign1=-1)
DD347 = NonlinearityParams(3.0, 4.0, 7.0, sign1=-1, sign3=-1)


def test_closed_form_constants_ff():
    # independent evaluation of the closed forms for p=2, q=3, r=4
    a_sharp = ((3.0 - 2.0) * (2.0 - 1.0) * (4.0 + 1.0)
               / ((4.0 - 3.0) * (4.0 - 1.0) * (2.0 + 1.0)))  # = 5/9
    assert math.isclose(a_sharp, 5.0 / 9.0, rel_tol=1e-15)
    ea, g1, rng = endpoints(FF234)
    assert abs(ea - 5.0 / 9.0) <= 1e-12
    assert abs(g1 - 4.0 / math.sqrt(5.0)) <= 1e-12
    om, ga = gamma_omega_ne(FF234, ea)
    assert abs(om - 2.0 * math.sqrt(5.0) / 27.0) <= 1e-12
    assert abs(ga - g1) <= 1e-12
    assert rng == "(0, a_sharp]"


def test_closed_form_constants_dd():
    ea, g1, rng = endpoints(DD347)
    assert abs(ea - math.sqrt(2.0 / 3.0)) <= 1e-12
    om, _ = gamma_omega_ne(DD347, ea)
    assert abs(om) <= 1e-12
    assert rng == "(a_b, inf)"


def test_curve_example_point():
    om, ga = gamma_omega_ne(FF234, 5.0 / 9.0)
    assert math.isclose(om, 0.165634, rel_tol=1e-5)
    assert math.isclose(ga, 1.788854, rel_tol=1e-6)
    assert math.isclose(ga, 4.0 / math.sqrt(5.0), rel_tol=1e-14)


def test_second_derivative_vanishes_at_ff_endpoint():
    ea, _, _ = endpoints(FF234)
    om, ga = gamma_omega_ne(FF234, ea)
    out = eval_U(FF234, om, ga, ea)
    assert abs(out.second_deriv) <= 1e-10


def test_df_has_no_curve():
    assert endpoints(DF357) == (None, None, "empty")
    with pytest.raises(NotOnCurve):
        omega_star(DF357, 0.0)
    curve = sample_curve(DF357)
    assert curve.samples == ()


def test_curve_consistency_all_cases():
    # at curve points: U = 0, U' = 0, U'' >= 0, all within tight tolerance
    cases = (FF234, FD357, DD347)
    for params in cases:
        curve = sample_curve(params, n=200)
        assert len(curve.samples) == 200
        for a, om, ga in curve.samples:
            out = eval_U(params, om, ga, a)
            assert abs(out.value) <= 1e-10 * (1.0 + a)
            assert abs(out.first_deriv) <= 1e-10
            assert out.second_deriv >= -1e-10


def test_curve_monotone_parameterization():
    for params in (FF234, FD357, DD347):
        curve = sample_curve(params, n=120)
        arr = np.asarray(curve.samples)
        assert np.all(np.diff(arr[:, 0]) > 0)          # increasing a
        assert np.all(np.diff(arr[:, 1]) >= -1e-12)    # omega_ne nondecreasing
        assert np.all(np.diff(arr[:, 2]) <= 1e-12)     # gamma_ne nonincreasing


def test_omega_star_round_trip():
    for params in (FF234, FD357, DD347):
        curve = sample_curve(params, n=25)
        for a, om, ga in curve.samples:
            got = omega_star(params, ga)
            assert abs(got - om) <= 1e-9 * (1.0 + abs(om))


def test_omega_star_at_ff_endpoint():
    _, g1, _ = endpoints(FF234)
    assert math.isclose(omega_star(FF234, g1),
                        2.0 * math.sqrt(5.0) / 27.0, rel_tol=1e-9)


def test_omega_star_admissible_ranges():
    _, g1, _ = endpoints(FF234)
    with pytest.raises(NotOnCurve):
        omega_star(FF234, g1 - 0.1)
    dd_a, dd_g1, _ = endpoints(DD347)
    with pytest.raises(NotOnCurve):
        omega_star(DD347, dd_g1 + 0.1)
    # DD admissible side: gamma < gamma1, curve starts at omega 0
    small = omega_star(DD347, dd_g1 - 1e-6)
    assert 0.0 < small < 1e-3


def test_omega_star_decreasing_fd():
    vals = [omega_star(FD357, g) for g in (-5.0, -1.0, 0.0, 1.0, 5.0, 100.0)]
    assert all(v2 < v1 for v1, v2 in zip(vals, vals[1:]))
    assert vals[-1] < 1e-2  # omega* -> 0 as gamma -> inf


def test_sample_curve_range_override():
    curve = sample_curve(FF234, n=30, a_min=0.1, a_max=0.4)
    arr = np.asarray(curve.samples)
    assert arr[0, 0] >= 0.1 - 1e-12
    assert arr[-1, 0] <= 0.4 + 1e-12
    assert curve.endpoint_a is not None
    assert curve.gamma1 is not None


def test_gamma_omega_ne_requires_positive_a():
    with pytest.raises(ValueError):
        gamma_omega_ne(FF234, 0.0)
    with pytest.raises(ValueError):
        gamma_omega_ne(FF234, -1.0)
