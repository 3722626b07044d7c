"""Oscillatory-kernel closed forms against the regularized oscillatory oracle."""

import math

import numpy as np

import pytest

from ramaseries.identities import log_sin_integral, trig_cos, trig_lambda
from ramaseries.quadrature import IntegralSpec, abel_oscillatory, oracle_value
from ramaseries.special_fn import DomainError

LN2 = math.log(2.0)


def test_sin_family_spot_values():
    spots = (
        (1, 2.0, 0.0, -1.0 / 3.0, 0.0),
        (1, 2.0, 1.0, 0.0, -4.0 / 9.0),
        (2, 3.0, 0.0, 0.0, -2.0 / 15.0),
        (2, 3.0, 1.0, 46.0 / 225.0, 0.0),
    )
    for a, w, alpha, lc, ls in spots:
        got = trig_lambda(a, w, alpha)
        assert got.lambda_c == pytest.approx(lc, abs=1e-12), (a, w, alpha)
        assert got.lambda_s == pytest.approx(ls, abs=1e-12), (a, w, alpha)


def test_cos_family_spot_values():
    assert trig_cos(1, 2.0, 0.0).lambda_s == pytest.approx(2.0 / 3.0, abs=1e-12)
    assert trig_cos(2, 3.0, 0.0).lambda_s == pytest.approx(7.0 / 15.0, abs=1e-12)
    got = trig_cos(1, 2.0, 1.0)
    assert got.lambda_c == pytest.approx(-5.0 / 9.0, abs=1e-12)
    assert got.lambda_s == pytest.approx(0.0, abs=1e-12)


def test_sin_family_vs_oscillatory_oracle():
    for a, w, alpha in ((1, 2.0, 0.0), (2, 3.0, 1.0)):
        got = trig_lambda(a, w, alpha)
        oc = oracle_value(
            IntegralSpec("F7", {"a": a, "w": w, "alpha": alpha})
        ).value
        os_ = oracle_value(
            IntegralSpec("F8", {"a": a, "w": w, "alpha": alpha})
        ).value
        assert got.lambda_c == pytest.approx(oc, abs=1e-3), (a, w, alpha)
        assert got.lambda_s == pytest.approx(os_, abs=1e-3), (a, w, alpha)


def test_cos_family_vs_oscillatory_oracle():
    for a, v, alpha in ((1, 2.0, 0.0), (2, 3.0, 0.0)):
        got = trig_cos(a, v, alpha)
        os_ = oracle_value(
            IntegralSpec("F10", {"a": a, "v": v, "alpha": alpha})
        ).value
        assert got.lambda_s == pytest.approx(os_, abs=1e-3), (a, v, alpha)


def test_abel_regularization_sanity():
    # int_0^inf sin(x)/x dx = pi/2 under damping, a classical control case
    val = abel_oscillatory(lambda x: np.sin(x) / x)
    assert val.value == pytest.approx(math.pi / 2.0, abs=1e-6)


def test_log_sin_spot_values():
    dc, ds = log_sin_integral(1, 3.0, 0.0)
    assert dc == pytest.approx(LN2 / 8.0 - 1.0 / 32.0, abs=1e-10)
    assert ds == pytest.approx(-math.pi / 16.0, abs=1e-10)
    dc, ds = log_sin_integral(2, 3.0, 0.0)
    assert dc == pytest.approx(math.pi / 15.0, abs=1e-10)
    assert ds == pytest.approx(2.0 / 450.0 - (2.0 / 15.0) * LN2, abs=1e-10)
    dc, ds = log_sin_integral(2, 3.0, 1.0)
    assert ds == pytest.approx(46.0 * math.pi / 450.0, abs=1e-10)


def test_log_sin_vs_quadrature():
    a, w, alpha = 2, 3.0, 1.0
    dc, ds = log_sin_integral(a, w, alpha)
    oc = oracle_value(
        IntegralSpec("F11", {"a": a, "w": w, "alpha": alpha, "part": "c"})
    ).value
    os_ = oracle_value(
        IntegralSpec("F11", {"a": a, "w": w, "alpha": alpha, "part": "s"})
    ).value
    assert dc == pytest.approx(oc, abs=1e-6)
    assert ds == pytest.approx(os_, abs=1e-6)


def test_trig_domain():
    with pytest.raises(DomainError):
        trig_lambda(0, 2.0, 0.0)
    with pytest.raises(DomainError):
        trig_lambda(2, 1.0, 0.0)  # frequency must exceed the power
    with pytest.raises(DomainError):
        trig_cos(1, 2.0, -1.0)
    with pytest.raises(DomainError):
        log_sin_integral(1, 3.0, 0.5)  # integer orders only
