import math
from fractions import Fraction

import numpy as np
import pytest

from hermasym.logreal import MAX_PLAIN_LOG
from hypothesis import given, settings, strategies as st

from conftest import SQRT8
from hermasym.exactpoly import (CapabilityError, CharlierPoint, HermitePoint,
                                charlier_exact_sum, hermite_exact_sum, hermite_recurrence_log,
                                hermite_zeros_exact)


def _rel(a, b):
    return a.rel_err(b)


# -- Hermite values -------------------------------------------------------------

@pytest.mark.parametrize("n, xi, want", [
    (0, 0.37, 1),
    (2, 1.0, 2),      # 4x^2 - 2
    (3, 2.0, 40),     # 8x^3 - 12x
    (1, 3.0, 6),
    (5, 1.0, -8),     # 32 - 160 + 120
])
def test_hermite_small_degrees(n, xi, want):
    for f in (hermite_exact_sum, hermite_recurrence_log):
        v = f(HermitePoint(n, xi))
        assert v.sign == (1 if want > 0 else -1)
        assert v.to_float() == pytest.approx(want, rel=1e-14)


def test_hermite_exact_is_exact_on_binary_input():
    # the float nearest sqrt(8) as a Fraction, evaluated by hand
    q = Fraction(SQRT8)
    want = 16 * q**4 - 48 * q**2 + 12
    got = hermite_exact_sum(4, SQRT8)
    # only the final log conversion rounds
    assert got.to_float() == pytest.approx(float(want), rel=4e-15)
    assert got.to_float() == pytest.approx(652, rel=1e-14)


def test_hermite_exact_matches_numpy_for_moderate_degree():
    from numpy.polynomial.hermite import hermval
    for n in (7, 12, 20):
        c = [0] * n + [1]
        for xi in (-2.3, 0.4, 3.1):
            assert hermite_exact_sum(n, xi).to_float() == pytest.approx(hermval(xi, c), rel=1e-12)


def test_hermite_large_values_stay_finite():
    v = hermite_exact_sum(100, 15.0)
    assert v.sign == 1
    # mpmath hermite(100, 15) at 40 digits
    assert v.log_abs == pytest.approx(324.90623284659603727, rel=1e-15)
    assert hermite_recurrence_log(100, 15.0).log_abs == pytest.approx(v.log_abs, rel=1e-14)
    big = hermite_exact_sum(400, 25.0)
    assert math.isfinite(big.log_abs) and big.log_abs > 700


def test_hermite_exact_degree_cap():
    with pytest.raises(CapabilityError):
        hermite_exact_sum(401, 1.0)


def test_point_validation():
    with pytest.raises(ValueError):
        HermitePoint(-1, 0.0)
    with pytest.raises(ValueError):
        HermitePoint(2, math.inf)
    with pytest.raises(ValueError):
        CharlierPoint(2, 0.0, 1.0)


def test_oracles_agree_on_grid():
    grid = np.linspace(-10.0, 10.0, 41)
    for n in range(51):
        for xi in grid:
            a = hermite_exact_sum(n, xi)
            b = hermite_recurrence_log(n, xi)
            assert a.sign == b.sign
            assert _rel(b, a) <= 1e-10, (n, xi)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 60), st.floats(-12, 12, allow_nan=False))
def test_reflection_exact(n, xi):
    for f in (hermite_exact_sum, hermite_recurrence_log):
        a, b = f(n, xi), f(n, -xi)
        assert b.log_abs == a.log_abs
        assert b.sign == (a.sign if n % 2 == 0 else -a.sign)


# -- Charlier -------------------------------------------------------------------

def test_charlier_trivial():
    assert charlier_exact_sum(CharlierPoint(0, 7.0, 3.2)).to_float() == 1.0
    assert charlier_exact_sum(CharlierPoint(5, 9.0, 0.0)).to_float() == 1.0


def test_charlier_rational_sum():
    # 1 - 5.76 + 12.3552 - 11.696256 + 4.12293024
    v = charlier_exact_sum(CharlierPoint(4, 100.0, 144.0))
    assert v.to_float() == pytest.approx(0.02187424, rel=1e-14)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.1, 1e4), st.floats(-1e3, 1e4))
def test_charlier_degree_one(a, x):
    v = charlier_exact_sum(CharlierPoint(1, a, x))
    want = 1 - x / a
    if want == 0:
        assert v.sign == 0 or abs(v.to_float()) < 1e-14
    else:
        assert v.to_float() == pytest.approx(want, rel=1e-14)


def _charlier_condition(n, a, x):
    # sum of |terms| over |sum|, exactly
    a, x = Fraction(a), Fraction(x)
    t, total, absum = Fraction(1), Fraction(1), Fraction(1)
    for k in range(n):
        t = t * (k - n) * (k - x) / (-(k + 1) * a)
        total += t
        absum += abs(t)
    return float(absum / abs(total))


@pytest.mark.parametrize("n, a, x", [(6, 50.0, 31.5), (12, 300.0, 200.25), (20, 1000.0, 1500.0)])
def test_charlier_float_path_within_conditioning(n, a, x):
    p = CharlierPoint(n, a, x)
    err = _rel(charlier_exact_sum(p, method="float"), charlier_exact_sum(p))
    assert err <= 1e-14 * n * _charlier_condition(n, a, x)


def test_charlier_negative_a_rejected():
    with pytest.raises(ValueError):
        charlier_exact_sum(3, -1.0, 2.0)


# -- zeros ------------------------------------------------------------------------

def test_zeros_small_degrees():
    assert hermite_zeros_exact(1) == [0.0]
    z2 = hermite_zeros_exact(2)
    assert z2 == pytest.approx([1 / math.sqrt(2), -1 / math.sqrt(2)], abs=1e-12)
    z3 = hermite_zeros_exact(3)
    assert z3 == pytest.approx([math.sqrt(1.5), 0.0, -math.sqrt(1.5)], abs=1e-12)


def test_zeros_reject_degree_zero():
    with pytest.raises(ValueError):
        hermite_zeros_exact(0)


@pytest.mark.parametrize("n", [4, 9, 20, 33, 60])
def test_zeros_match_numpy(n):
    from numpy.polynomial.hermite import hermgauss
    ref = sorted(hermgauss(n)[0], reverse=True)
    assert hermite_zeros_exact(n) == pytest.approx(ref, abs=1e-12)


def test_zeros_structure_and_interlacing():
    prev = hermite_zeros_exact(1)
    for n in range(2, 41):
        z = hermite_zeros_exact(n)
        assert len(z) == n
        assert all(a > b for a, b in zip(z, z[1:]))
        assert z == [-v for v in reversed(z)]
        # each zero of H_{n-1} lies strictly between consecutive zeros of H_n
        assert all(z[i] > prev[i] > z[i + 1] for i in range(n - 1))
        prev = z


def test_zeros_large_degree_are_sign_changes():
    z = hermite_zeros_exact(200)
    assert len(z) == 200
    for r in z[:5]:
        assert hermite_recurrence_log(200, r - 1e-9).sign != hermite_recurrence_log(200, r + 1e-9).sign
