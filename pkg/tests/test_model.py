import json

import pytest
from hypothesis import given, strategies as st

from wmotzkin import (
    ConfigError,
    DomainError,
    DriftKind,
    ModelParams,
    classify,
    is_balanced,
    step_weights,
)
from corpus import CORPUS, DEGENERATE, SHOWCASE

nonneg = st.integers(min_value=0, max_value=9)
params_strategy = st.builds(ModelParams, nonneg, nonneg, nonneg, nonneg, nonneg, nonneg)


def test_classify_showcase():
    regime = classify(SHOWCASE)
    assert regime.kind is DriftKind.TWO_REAL_ROOTS
    assert regime.r1 == -5.0
    assert regime.r2 == -1.0
    assert regime.nu == 8.0
    assert regime.c0 == -39.0


def test_classify_constant():
    assert classify(ModelParams(0, 0, 0, 1, 1, 1)).kind is DriftKind.CONSTANT


def test_classify_double_root():
    regime = classify(ModelParams(1, 1, 2, 1, 1, 0))
    assert regime.kind is DriftKind.DOUBLE_ROOT
    assert regime.r == -1.0
    assert regime.nu == 1.0
    assert regime.c0 == -1.0


def test_classify_linear_and_complex():
    assert classify(ModelParams(0, 1, 2, 1, 1, 1)).kind is DriftKind.LINEAR
    regime = classify(ModelParams(1, 1, 0, 1, 1, 1))
    assert regime.kind is DriftKind.COMPLEX_ROOTS
    assert regime.p == 0.0
    assert regime.q == 1.0


def test_is_balanced():
    assert is_balanced(SHOWCASE)
    assert not is_balanced(ModelParams(0, 0, 0, 1, 1, 1))
    assert is_balanced(ModelParams(1, 1, 2, 1, 1, 0))


def test_step_weights_examples():
    assert step_weights(SHOWCASE, 0) == (8, 5, 1)
    assert step_weights(SHOWCASE, 3) == (11, 20, 19)
    for k in (0, 2, 7):
        assert step_weights(ModelParams(0, 0, 0, 1, 1, 1), k) == (1, 1, 1)
    with pytest.raises(DomainError):
        step_weights(SHOWCASE, -1)


@given(params_strategy, st.integers(min_value=0, max_value=50))
def test_step_weights_affine(params, k):
    a0, b0, g0 = step_weights(params, k)
    a1, b1, g1 = step_weights(params, k + 1)
    assert (a1 - a0, b1 - b0, g1 - g0) == (params.a, params.b, params.c)


@given(params_strategy)
def test_classify_total_and_exclusive(params):
    regime = classify(params)
    A, B = params.a, params.c
    delta = regime.coeffs.delta
    if A == 0 and B == 0:
        assert regime.kind is DriftKind.CONSTANT
    elif A == 0:
        assert regime.kind is DriftKind.LINEAR
    elif delta > 0:
        assert regime.kind is DriftKind.TWO_REAL_ROOTS
    elif delta == 0:
        assert regime.kind is DriftKind.DOUBLE_ROOT
    else:
        assert regime.kind is DriftKind.COMPLEX_ROOTS


@given(params_strategy)
def test_balanced_iff_beta0_equals_b(params):
    assert is_balanced(params) == (params.beta0 == params.b)


def test_two_real_roots_invariants():
    for params in CORPUS:
        regime = classify(params)
        if regime.kind is not DriftKind.TWO_REAL_ROOTS:
            continue
        A, B, C = regime.coeffs.A, regime.coeffs.B, regime.coeffs.C
        assert regime.r1 < regime.r2
        assert regime.r2 <= 1e-12  # nonnegative B, C force the big root <= 0
        assert abs(regime.r1 + regime.r2 + B / A) <= 1e-12 * max(1.0, abs(B / A))
        assert abs(regime.r1 * regime.r2 - C / A) <= 1e-12 * max(1.0, abs(C / A))


def test_regime_constants_per_kind():
    for params in CORPUS:
        regime = classify(params)
        if regime.kind is DriftKind.DOUBLE_ROOT:
            assert regime.r == -regime.coeffs.B / (2 * regime.coeffs.A)
        if regime.kind is DriftKind.COMPLEX_ROOTS:
            assert regime.q > 0
            assert regime.p == -regime.coeffs.B / (2 * regime.coeffs.A)
        if regime.is_quadratic:
            assert regime.nu_exact.denominator >= 1
            assert float(regime.nu_exact) == regime.nu


def test_validation_rejects_bad_values():
    with pytest.raises(DomainError):
        ModelParams(-1, 0, 0, 1, 1, 1)
    with pytest.raises(DomainError):
        ModelParams(1, 0, 0, 1, 1, 1.5)


def test_degenerate_flagged_but_accepted():
    assert DEGENERATE.is_degenerate
    assert not SHOWCASE.is_degenerate


def test_parse_key_value_and_json():
    parsed = ModelParams.parse("a=1 b=5 c=6 alpha0=8 beta0=5 gamma0=1")
    assert parsed == SHOWCASE
    parsed = ModelParams.parse("a=1, b=5, c=6, alpha0=8, beta0=5, gamma0=1")
    assert parsed == SHOWCASE
    parsed = ModelParams.parse(json.dumps(SHOWCASE.to_dict()))
    assert parsed == SHOWCASE


def test_parse_errors():
    with pytest.raises(ConfigError):
        ModelParams.parse("a=1 b=2")
    with pytest.raises(ConfigError):
        ModelParams.parse("a=1 b=2 c=3 alpha0=1 beta0=1 gamma0=1 zeta=2")
    with pytest.raises(ConfigError):
        ModelParams.parse("")
    with pytest.raises(ConfigError):
        ModelParams.parse("{not json")
