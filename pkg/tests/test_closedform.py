import math

import numpy as np
import pytest

from wmotzkin import (
    AccuracyError,
    DomainError,
    EgfEvaluator,
    ModelParams,
    RegimeError,
    SingularityMap,
    build_triangle,
)
from corpus import (
    COMPLEX_UNIT,
    DOUBLE_ROOT,
    SHOWCASE,
    balanced_corpus,
    balanced_quadratic,
)


def test_requires_balanced():
    with pytest.raises(RegimeError):
        EgfEvaluator(ModelParams(0, 0, 0, 1, 1, 1))  # beta0 != b


def test_initial_condition():
    for params in balanced_corpus():
        assert math.isclose(EgfEvaluator(params).eval(1.3, 0.0), 1.0, rel_tol=1e-14)


def test_double_root_value():
    ev = EgfEvaluator(DOUBLE_ROOT)
    assert math.isclose(ev.eval(1.0, 0.25), 2.0 * math.exp(-0.25), rel_tol=1e-14)


def test_constant_value():
    ev = EgfEvaluator(ModelParams(0, 0, 0, 1, 0, 1))
    assert math.isclose(ev.eval(2.0, 0.5), math.exp(1.5), rel_tol=1e-14)


def test_linear_value():
    # B=1, C=1, alpha0=1, gamma0=1: exponent (e^t - 1)(x + 1) + 0*t at t=log 2.
    ev = EgfEvaluator(ModelParams(0, 1, 1, 1, 1, 1))
    t = math.log(2.0)
    assert math.isclose(ev.eval(2.0, t), math.exp(3.0), rel_tol=1e-13)


def test_domain_errors_past_singularity():
    ev = EgfEvaluator(SHOWCASE)
    tau = SingularityMap(SHOWCASE).tau(1.0)
    with pytest.raises(DomainError):
        ev.eval(1.0, tau)
    with pytest.raises(DomainError):
        ev.eval(1.0, tau * 1.5)
    ev = EgfEvaluator(COMPLEX_UNIT)
    tau = SingularityMap(COMPLEX_UNIT).tau(1.0)
    with pytest.raises(DomainError):
        ev.eval(1.0, tau + 1e-9)


def test_tau_values():
    assert math.isclose(SingularityMap(SHOWCASE).tau(1.0), math.log(3.0) / 4.0, rel_tol=1e-14)
    assert math.isclose(SingularityMap(DOUBLE_ROOT).tau(1.0), 0.5, rel_tol=1e-14)
    # p=0, q=1: tau -> pi/2 as x -> 0+.
    assert math.isclose(SingularityMap(COMPLEX_UNIT).tau(1e-14), math.pi / 2.0, rel_tol=1e-12)


def test_tau_regime_and_domain_errors():
    with pytest.raises(RegimeError):
        SingularityMap(ModelParams(0, 1, 1, 1, 1, 1))
    smap = SingularityMap(SHOWCASE)
    with pytest.raises(DomainError):
        smap.tau(-1.0)  # r2 = -1 bounds the component
    with pytest.raises(DomainError):
        SingularityMap(COMPLEX_UNIT).tau(0.0)


def test_tau_derivative_values():
    der = SingularityMap(SHOWCASE).derivatives(1.0)
    assert math.isclose(der.tau1, -1.0 / 12.0, rel_tol=1e-14)
    assert math.isclose(der.chi, (1.0 / 3.0) / math.log(3.0), rel_tol=1e-13)
    der = SingularityMap(DOUBLE_ROOT).derivatives(1.0)
    assert math.isclose(der.chi, 0.5, rel_tol=1e-14)
    assert math.isclose(der.tau2 / der.tau, 0.5, rel_tol=1e-14)


def test_tau_derivatives_match_finite_differences():
    h1, h2 = 1e-6, 1e-4  # second differences need a larger step for roundoff
    for params in balanced_quadratic():
        smap = SingularityMap(params)
        for x in (0.7, 1.0, 1.9):
            der = smap.derivatives(x)
            fd1 = (smap.tau(x + h1) - smap.tau(x - h1)) / (2 * h1)
            fd2 = (smap.tau(x + h2) - 2 * smap.tau(x) + smap.tau(x - h2)) / (h2 * h2)
            assert abs(der.tau1 - fd1) <= 1e-6 * abs(der.tau1)
            assert abs(der.tau2 - fd2) <= 1e-5 * max(abs(der.tau2), 1e-3)


def test_tau_monotone_decreasing_positive():
    for params in balanced_quadratic():
        smap = SingularityMap(params)
        lo = max(smap.domain_low, 0.0)
        grid = np.linspace(lo + 0.05, lo + 6.0, 40)
        values = [smap.tau(float(x)) for x in grid]
        assert all(v > 0 for v in values)
        assert all(a > b for a, b in zip(values, values[1:]))


def test_taylor_coefficient_examples():
    ev = EgfEvaluator(DOUBLE_ROOT)
    coeffs = ev.taylor_coefficients(1.0, 3)
    assert math.isclose(coeffs[0], 1.0, rel_tol=1e-10)
    assert math.isclose(coeffs[2], 2.5, rel_tol=1e-10)  # P_2(x) = 2x^2+2x+1 at x=1


def test_taylor_matches_exact_rows():
    for params in balanced_corpus():
        ev = EgfEvaluator(params)
        tri = build_triangle(params, 8)
        for x in (0.5, 1.0, 2.0):
            coeffs = ev.taylor_coefficients(x, 9)
            for n in range(9):
                exact = sum(w * x**k for k, w in enumerate(tri.row(n)))
                exact /= math.factorial(n)
                assert abs(coeffs[n] - exact) <= 1e-8 * max(abs(exact), 1e-300), (
                    params,
                    x,
                    n,
                )


def test_taylor_rejects_bad_order():
    ev = EgfEvaluator(DOUBLE_ROOT)
    with pytest.raises(DomainError):
        ev.taylor_coefficients(1.0, 31)
    with pytest.raises(DomainError):
        ev.taylor_coefficients(-1.0, 5)


def test_special_case_power_one_matches_general_path():
    # alpha0 == A: the direct-ratio branch must agree with the generic
    # principal-power evaluation used on contours.
    params = ModelParams(1, 2, 5, 1, 2, 0)
    ev = EgfEvaluator(params)
    tau = SingularityMap(params).tau(1.0)
    for frac in (0.1, 0.5, 0.9):
        t = frac * tau
        direct = ev.eval(1.0, t)
        generic = ev._eval_complex(1.0, complex(t, 0.0))
        assert abs(generic.imag) <= 1e-12 * abs(direct)
        assert math.isclose(generic.real, direct, rel_tol=1e-12)


def test_blowup_rate_near_singularity():
    # w(x, tau(1-eps)) ~ eps^{-nu}: fitted log-log slope within 5% of -nu.
    for params in (SHOWCASE, DOUBLE_ROOT, COMPLEX_UNIT):
        ev = EgfEvaluator(params)
        nu = ev.regime.nu
        tau = SingularityMap(params).tau(1.0)
        eps = np.logspace(-4, -2, 9)
        logs = [math.log(ev.eval(1.0, tau * (1.0 - e))) for e in eps]
        slope = np.polyfit(np.log(eps), logs, 1)[0]
        assert abs(slope + nu) <= 0.05 * nu
