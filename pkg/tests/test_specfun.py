import math

import numpy as np
import pytest

from hermasym.specfun import KernelPolicy, airy_ai, bessel_j


# -- Airy ---------------------------------------------------------------------

def test_airy_at_origin():
    # Maclaurin oracle at 40 digits: 1 / (3^(2/3) Gamma(2/3))
    assert airy_ai(0.0) == pytest.approx(0.355028053887817, abs=1e-15)


def test_airy_first_zero():
    assert abs(airy_ai(-2.338107410459767)) <= 1e-10


def test_airy_decays_on_positive_axis():
    v = airy_ai(20.0)
    assert 0.0 < v < 1e-26
    assert airy_ai(200.0) == 0.0


@pytest.mark.parametrize("z", [math.inf, -math.inf, math.nan])
def test_airy_rejects_non_finite(z):
    with pytest.raises(ValueError):
        airy_ai(z)


def test_airy_against_mpmath(mp):
    zs = np.linspace(-12.0, 12.0, 481)
    err = max(abs(airy_ai(z) - float(mp.airyai(z))) for z in zs)
    assert err <= 1e-12
    for z in (12.5, 15.0, 30.0, 60.0):
        ref = float(mp.airyai(z))
        assert abs(airy_ai(z) - ref) <= 1e-10 * ref


def test_airy_oscillatory_tail_against_mpmath(mp):
    for z in (-12.5, -20.0, -50.0, -200.0):
        assert airy_ai(z) == pytest.approx(float(mp.airyai(z)), abs=1e-13)


def test_airy_ode_residual():
    h = 1e-3
    for z in np.linspace(-5.0, 5.0, 201):
        d2 = (airy_ai(z + h) - 2 * airy_ai(z) + airy_ai(z - h)) / (h * h)
        assert abs(d2 - z * airy_ai(z)) <= 1e-4


# -- Bessel -------------------------------------------------------------------

def _bessel_series_oracle(mp, k, x):
    # ascending power series at 40 digits
    x = mp.mpf(x)
    return float(mp.nsum(lambda m: (-1) ** m * (x / 2) ** (2 * m + k)
                         / (mp.factorial(m) * mp.factorial(m + k)), [0, mp.inf]))


def test_bessel_trivial_values():
    assert bessel_j(0, 0.0) == 1.0
    assert bessel_j(1, 0.0) == 0.0
    assert bessel_j(7, 0.0) == 0.0


def test_bessel_small_argument():
    # ascending-series oracle
    assert bessel_j(1, 0.8) == pytest.approx(0.368842046094, abs=1e-12)
    assert bessel_j(1, -0.8) == pytest.approx(-0.368842046094, abs=1e-12)


def test_bessel_rejects_negative_order():
    with pytest.raises(ValueError):
        bessel_j(-1, 1.0)
    with pytest.raises(ValueError):
        bessel_j(1.5, 1.0)


def test_bessel_reflection_bit_identical():
    for k in range(51):
        for x in np.linspace(-10.0, 10.0, 41):
            assert bessel_j(k, -x) == (-1) ** k * bessel_j(k, x)


@pytest.mark.parametrize("k", [0, 1, 2, 5, 10, 30, 31, 60])
def test_bessel_against_series_oracle(mp, k):
    for x in (0.3, 2.0, 7.5, 19.0, 30.0, 45.0):
        assert bessel_j(k, x) == pytest.approx(_bessel_series_oracle(mp, k, x), abs=1e-12)


def test_bessel_large_order(mp):
    # uniform region around x ~ k where the Kapteyn coefficients live
    for k, x in [(500, 495.0), (2000, 1980.2), (10000, 9999.0), (10000, 10050.0)]:
        ref = float(mp.besselj(k, x, maxterms=10**6, maxprec=20000))
        assert bessel_j(k, x) == pytest.approx(ref, abs=1e-12)


def test_bessel_recurrence_residual():
    for k in range(1, 101, 3):
        for x in np.linspace(0.1, 50.0, 60):
            r = bessel_j(k - 1, x) + bessel_j(k + 1, x) - 2 * k / x * bessel_j(k, x)
            assert abs(r) <= 1e-10


def test_bessel_normalization_sum():
    for x in np.linspace(0.0, 20.0, 41):
        s = bessel_j(0, x) + 2 * sum(bessel_j(2 * k, x) for k in range(1, 61))
        assert abs(s - 1.0) <= 1e-10


def test_kernel_policy_validation():
    with pytest.raises(ValueError):
        KernelPolicy(target_abs_tol=0.0)
    with pytest.raises(ValueError):
        KernelPolicy(max_terms=0)
    assert KernelPolicy().max_terms == 500
