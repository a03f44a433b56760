import math
import random
from fractions import Fraction

import pytest

from hermasym.charlier_asym import (CharlierTag, EdgeSide, OuterSide, charlier_eval_asym,
                                    classify_charlier, delta, f_airy_edge, f_oscillatory,
                                    f_outer, small_n_formula, turning_points)
from hermasym.exactpoly import CharlierPoint, charlier_exact_sum
from hermasym.fidelity import Fidelity


def _err(n, a, x, approx):
    return approx.rel_err(charlier_exact_sum(n, a, x))


# -- turning points and Delta ---------------------------------------------------

@pytest.mark.parametrize("n, a, expected", [(4, 16, (4.0, 36.0)), (1, 100, (81.0, 121.0))])
def test_turning_points(n, a, expected):
    tp = turning_points(n, a)
    assert (tp.omega_minus, tp.omega_plus) == expected


def test_turning_point_degenerates_when_n_equals_a():
    assert turning_points(7, 7).omega_minus == 0.0


def test_turning_points_reject_bad_a():
    with pytest.raises(ValueError):
        turning_points(3, 0.0)


def test_delta_examples():
    assert delta(4, 16, 4) == 0.0
    assert delta(4, 16, 36) == 0.0
    assert delta(1, 100, 40) == pytest.approx(math.sqrt(3321), rel=1e-14)


def test_delta_rejects_band_interior():
    with pytest.raises(ValueError, match="oscillatory"):
        delta(4, 16, 20)


def test_delta_vanishes_at_turning_points():
    rng = random.Random(7)
    for _ in range(100):
        a = rng.uniform(2.0, 1e4)
        n = rng.randint(1, int(a - 1)) if a > 2 else 1
        tp = turning_points(n, a)
        assert delta(n, a, tp.omega_minus) <= 1e-9
        assert delta(n, a, tp.omega_plus) <= 1e-9


# -- outer forms -------------------------------------------------------------------

def test_f3_example():
    v = f_outer(1, OuterSide.BELOW, a=100.0, x=40.0)
    assert v.to_float() == pytest.approx(0.6, rel=1e-2)


def test_f4_example():
    v = f_outer(1, OuterSide.ABOVE, a=100.0, x=200.0)
    assert v.to_float() == pytest.approx(-1.0, rel=2e-3)


def test_f3_as_printed_blows_up():
    # the printed third Psi_3 term keeps +Delta and leaves e^57 behind
    v = f_outer(1, OuterSide.BELOW, Fidelity.AS_PRINTED, a=100.0, x=40.0)
    d = math.sqrt(3321.0)
    psi = (40 * math.log((100 + 40 - 1 + d) / 200) + math.log((100 - 40 + 1 + d) / 200)
           + 0.5 * (100 - 40 - 1 + d))
    log_l = 0.5 * math.log((100 - 40 - 1 + d) / (2 * d))
    assert v.log_abs == pytest.approx(psi + log_l, rel=1e-14)
    assert v.log_abs == pytest.approx(57.1175, abs=1e-4)


def test_f4_has_no_fidelity_switch():
    a = f_outer(3, OuterSide.ABOVE, Fidelity.AS_PRINTED, a=50.0, x=120.0)
    b = f_outer(3, OuterSide.ABOVE, Fidelity.CORRECTED, a=50.0, x=120.0)
    assert a == b


@pytest.mark.parametrize("n, a", [(1, 2.0), (5, 9.0), (30, 1000.0), (99, 100.0)])
def test_f3_is_one_at_origin(n, a):
    assert f_outer(n, OuterSide.BELOW, a=a, x=0.0).log_abs == 0.0


def test_outer_sides_enforced():
    with pytest.raises(ValueError):
        f_outer(1, OuterSide.BELOW, a=100.0, x=90.0)
    with pytest.raises(ValueError):
        f_outer(1, OuterSide.ABOVE, a=100.0, x=100.0)


def test_f3_converges_at_half_lower_turning_point():
    errs = []
    for n in (5, 10, 20, 40):
        a = 25.0 * n
        x = turning_points(n, a).omega_minus / 2
        errs.append(_err(n, a, x, f_outer(n, OuterSide.BELOW, a=a, x=x)))
    assert all(e2 < e1 for e1, e2 in zip(errs, errs[1:])), errs


def test_f4_converges_above_upper_turning_point():
    errs = []
    for n in (5, 10, 20, 40):
        a = 25.0 * n
        x = 1.5 * turning_points(n, a).omega_plus
        errs.append(_err(n, a, x, f_outer(n, OuterSide.ABOVE, a=a, x=x)))
    assert all(e2 < e1 for e1, e2 in zip(errs, errs[1:])), errs


# -- oscillatory band --------------------------------------------------------------

def test_oscillatory_midpoint_finite():
    v = f_oscillatory(8, a=50.0, x=58.0)
    assert math.isfinite(v.log_abs) or v.is_zero


def test_oscillatory_example():
    v = f_oscillatory(2, a=200.0, x=200.0)
    assert _err(2, 200.0, 200.0, v) <= 0.1


def test_oscillatory_signs_agree():
    n, a = 6, 400.0
    tp = turning_points(n, a)
    span = tp.omega_plus - tp.omega_minus
    for frac in (0.2, 0.35, 0.5, 0.65, 0.8):
        x = tp.omega_minus + frac * span
        assert f_oscillatory(n, a=a, x=x).sign == charlier_exact_sum(n, a, x).sign, x


def test_oscillatory_rejects_outside():
    with pytest.raises(ValueError):
        f_oscillatory(4, a=16.0, x=40.0)


# -- Airy edges ----------------------------------------------------------------------

def test_plus_edge_example():
    v = f_airy_edge(4, EdgeSide.PLUS, a=100.0, x=144.0)
    assert v.to_float() == pytest.approx(0.018165, rel=1e-4)
    assert _err(4, 100.0, 144.0, v) == pytest.approx(0.17, abs=0.01)


def test_minus_edge_example():
    v = f_airy_edge(4, EdgeSide.MINUS, a=100.0, x=64.0)
    assert v.to_float() == pytest.approx(0.009289, rel=1e-3)
    assert _err(4, 100.0, 64.0, v) == pytest.approx(0.21, abs=0.01)


def test_plus_edge_as_printed():
    # printed exponent ends in -sqrt(n); n = 4 gives a factor e^2 too large
    v = f_airy_edge(4, EdgeSide.PLUS, Fidelity.AS_PRINTED, a=100.0, x=144.0)
    c = f_airy_edge(4, EdgeSide.PLUS, Fidelity.CORRECTED, a=100.0, x=144.0)
    assert v.log_abs - c.log_abs == pytest.approx(4 - 2, abs=1e-13)
    assert v.to_float() == pytest.approx(0.134224, rel=1e-5)
    assert _err(4, 100.0, 144.0, v) > 5


def test_minus_edge_needs_n_below_a():
    with pytest.raises(ValueError):
        f_airy_edge(9, EdgeSide.MINUS, a=4.0, x=1.0)


@pytest.mark.parametrize("side", [EdgeSide.MINUS, EdgeSide.PLUS])
def test_edge_error_decays(side):
    def err(n):
        a = 25.0 * n
        tp = turning_points(n, a)
        x = tp.omega_minus if side is EdgeSide.MINUS else tp.omega_plus
        return _err(n, a, x, f_airy_edge(n, side, a=a, x=x))
    assert err(32) < err(4)


# -- small n ----------------------------------------------------------------------------

def test_small_n_examples():
    assert small_n_formula(0, a=3.0, x=7.0).log_abs == 0.0
    assert small_n_formula(1, a=100.0, x=40.0).to_float() == pytest.approx(0.6, rel=1e-15)
    v = small_n_formula(3, a=1000.0, x=10.0)
    assert v.to_float() == pytest.approx(0.970299, rel=1e-14)
    assert _err(3, 1000.0, 10.0, v) <= 1e-3


def test_small_n_exact_at_degree_one():
    for a, x in [(3.0, 1.0), (0.5, 2.0), (17.0, -4.0)]:
        exact = charlier_exact_sum(1, a, x)
        assert small_n_formula(1, a=a, x=x).rel_err(exact) <= 1e-15


# -- classifier and dispatch -------------------------------------------------------------

@pytest.mark.parametrize("x, tag", [
    (4.0, CharlierTag.NEAR_OMEGA_MINUS),
    (100.0, CharlierTag.ABOVE_OMEGA_PLUS),
    (20.0, CharlierTag.OSCILLATORY),
    (36.0, CharlierTag.NEAR_OMEGA_PLUS),
])
def test_classifier_examples(x, tag):
    assert classify_charlier(4, a=16.0, x=x).tag is tag


def test_classifier_small_n_default_and_override():
    assert classify_charlier(2, a=100.0, x=40.0).tag is CharlierTag.SMALL_N
    assert classify_charlier(1, a=100.0, x=40.0, small_n_max=0).tag is CharlierTag.BELOW_OMEGA_MINUS


def test_classifier_flags_hypothesis():
    r = classify_charlier(50, a=10.0, x=1.0)
    assert r.tag is CharlierTag.BELOW_OMEGA_MINUS and not r.within_hypothesis
    assert classify_charlier(5, a=100.0, x=1.0).within_hypothesis


def test_classifier_band_width_scales():
    # plus half-width is 6^(2/3) 4^(1/6) ~ 4.16 per unit of band width
    assert classify_charlier(4, 1.0, a=16.0, x=25.0).tag is CharlierTag.OSCILLATORY
    wide = classify_charlier(4, 3.0, a=16.0, x=25.0)
    assert wide.tag is CharlierTag.NEAR_OMEGA_PLUS
    assert wide.band_width_const == 3.0


def test_dispatch_reports_formula():
    v, region, name = charlier_eval_asym(CharlierPoint(4, 100.0, 144.0))
    assert region.tag is CharlierTag.NEAR_OMEGA_PLUS and name == "f_airy_plus"
    assert v == f_airy_edge(4, EdgeSide.PLUS, a=100.0, x=144.0)


def test_exact_reference_value():
    # terms 1 - 5.76 + 12.3552 - 11.696256 + 4.12293024 summed exactly
    exact = Fraction(1) - Fraction(576, 100) + Fraction(123552, 10000) \
        - Fraction(11696256, 1000000) + Fraction(412293024, 100000000)
    assert charlier_exact_sum(4, 100.0, 144.0).to_float() == pytest.approx(float(exact), rel=1e-15)
    assert float(exact) == pytest.approx(0.02187424, rel=1e-12)
