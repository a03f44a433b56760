"""Large-degree approximations of Charlier polynomials ``C_n^(a)(x)``.

Six cases, split by the turning points ``Omega^-+ = (sqrt(n) -+ sqrt(a))^2``:
small ``n``, the two exponential sides, the two Airy edges, and the
oscillatory band between the turning points.

In ``Fidelity.CORRECTED`` mode two printed terms are replaced:

* the third term of ``Psi_3`` is ``(a - x - n - Delta)/2``; with ``+Delta``
  the value at ``(n, a, x) = (1, 100, 40)`` comes out as ``e^57`` instead of
  ``0.6``, and the large-``a`` limit no longer reduces to the Hermite form;
* the last exponent term of both Airy edges is ``-n`` rather than ``-sqrt(n)``.
"""

from dataclasses import dataclass
import cmath
import enum
import math

from .exactpoly import CharlierPoint
from .fidelity import Fidelity
from .logreal import ONE, ZERO, SignedLogReal
from .specfun import airy_ai

__all__ = [
    "TurningPoints",
    "CharlierTag",
    "CharlierRegion",
    "OuterSide",
    "EdgeSide",
    "turning_points",
    "delta",
    "f_outer",
    "f_oscillatory",
    "f_airy_edge",
    "small_n_formula",
    "classify_charlier",
    "charlier_eval_asym",
]

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


class OuterSide(str, enum.Enum):
    BELOW = "below"
    ABOVE = "above"


class EdgeSide(str, enum.Enum):
    MINUS = "minus"
    PLUS = "plus"


class CharlierTag(str, enum.Enum):
    SMALL_N = "SMALL_N"
    BELOW_OMEGA_MINUS = "BELOW_OMEGA_MINUS"
    ABOVE_OMEGA_PLUS = "ABOVE_OMEGA_PLUS"
    NEAR_OMEGA_MINUS = "NEAR_OMEGA_MINUS"
    OSCILLATORY = "OSCILLATORY"
    NEAR_OMEGA_PLUS = "NEAR_OMEGA_PLUS"


@dataclass(frozen=True)
class TurningPoints:
    omega_minus: float
    omega_plus: float


@dataclass(frozen=True)
class CharlierRegion:
    tag: CharlierTag
    band_width_const: float = 1.0
    # False when the point is classified BELOW/NEAR_OMEGA_MINUS with n >= a,
    # outside the stated hypothesis 0 < n < a
    within_hypothesis: bool = True


def _point(p, a=None, x=None):
    if isinstance(p, CharlierPoint):
        return p
    return CharlierPoint(int(p), float(a), float(x))


def turning_points(n, a):
    if not a > 0:
        raise ValueError(f"Charlier parameter a must be positive, got {a!r}")
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n!r}")
    rn, ra = math.sqrt(n), math.sqrt(a)
    return TurningPoints((rn - ra) ** 2, (rn + ra) ** 2)


def _radicand(n, a, x):
    # a^2 - 2a(x+n) + (x-n)^2 factored over its roots; the expanded form
    # cancels catastrophically near the turning points
    tp = turning_points(n, a)
    return (x - tp.omega_minus) * (x - tp.omega_plus)


def delta(n, a, x):
    """``sqrt(a^2 - 2a(x+n) + (x-n)^2)``, real outside ``(Omega^-, Omega^+)``."""
    r = _radicand(n, a, x)
    if r < 0:
        tp = turning_points(n, a)
        raise ValueError(
            f"Delta is imaginary inside the oscillatory band "
            f"({tp.omega_minus:.6g}, {tp.omega_plus:.6g}); x = {x}")
    return math.sqrt(r)


def _log_f3(n, a, x, d, fidelity):
    # complex-safe: d may be imaginary inside the band
    third = 0.5 * (a - x - n - d) if fidelity is Fidelity.CORRECTED else 0.5 * (a - x - n + d)
    psi = (x * _log(( a + x - n + d) / (2.0 * a))
           + n * _log((a - x + n + d) / (2.0 * a))
           + third)
    return psi + 0.5 * _log((a - x - n + d) / (2.0 * d))


def _log_f4(n, a, x, d):
    psi = (x * _log((a + x - n - d) / (2.0 * a))
           + n * _log((x - a - n + d) / (2.0 * a))
           + 0.5 * (a - x - n + d))
    return psi + 0.5 * _log((x - a + n + d) / (2.0 * d))


def _log(z):
    if isinstance(z, complex):
        return cmath.log(z)
    return math.log(z)


def f_outer(p, side, fidelity=Fidelity.CORRECTED, a=None, x=None):
    """``F_3`` (side BELOW, ``x < Omega^-``) or ``F_4`` (side ABOVE, ``x > Omega^+``)."""
    p = _point(p, a, x)
    side = OuterSide(side)
    fidelity = Fidelity.parse(fidelity)
    n, a, x = p.n, p.a, p.x
    if n == 0:
        return ONE
    tp = turning_points(n, a)
    if side is OuterSide.BELOW:
        if not x < tp.omega_minus:
            raise ValueError(f"F_3 needs x < Omega^- = {tp.omega_minus:.6g}, got x = {x}")
        if x == 0.0 and fidelity is Fidelity.CORRECTED and n < a:
            # every Psi_3 term and log L_3 vanish here; rounding of Delta
            # would otherwise leave a residue of a few ulps
            return ONE
        d = delta(n, a, x)
        return SignedLogReal(1, _log_f3(n, a, x, d, fidelity))
    if not x > tp.omega_plus:
        raise ValueError(f"F_4 needs x > Omega^+ = {tp.omega_plus:.6g}, got x = {x}")
    d = delta(n, a, x)
    return SignedLogReal(-1 if n % 2 else 1, _log_f4(n, a, x, d))


def f_oscillatory(p, fidelity=Fidelity.CORRECTED, a=None, x=None):
    """``F_3 + F_4`` continued into the band, where ``Delta`` is imaginary."""
    p = _point(p, a, x)
    fidelity = Fidelity.parse(fidelity)
    n, a, x = p.n, p.a, p.x
    tp = turning_points(n, a)
    if not tp.omega_minus < x < tp.omega_plus:
        raise ValueError(
            f"oscillatory form needs Omega^- < x < Omega^+ "
            f"({tp.omega_minus:.6g}, {tp.omega_plus:.6g}); x = {x}")
    d = 1j * math.sqrt(-_radicand(n, a, x))
    w3 = _log_f3(n, a, x, d, fidelity)
    w4 = _log_f4(n, a, x, d)
    if n % 2:
        w4 += 1j * math.pi
    top = max(w3.real, w4.real)
    z = cmath.exp(w3 - top) + cmath.exp(w4 - top)
    if z.real == 0.0:
        return ZERO
    return SignedLogReal(1 if z.real > 0 else -1, top + math.log(abs(z.real)))


def f_airy_edge(p, side, fidelity=Fidelity.CORRECTED, a=None, x=None):
    """Airy-type form near ``Omega^-`` (side MINUS) or ``Omega^+`` (side PLUS)."""
    p = _point(p, a, x)
    side = EdgeSide(side)
    fidelity = Fidelity.parse(fidelity)
    n, a, x = p.n, p.a, p.x
    if n == 0:
        return ONE
    rn, ra = math.sqrt(n), math.sqrt(a)
    tp = turning_points(n, a)
    last = -n if fidelity is Fidelity.CORRECTED else -rn
    ratio6 = (n / a) ** (1.0 / 6.0)
    if side is EdgeSide.MINUS:
        if not 0 < n < a:
            raise ValueError(f"the Omega^- edge form needs 0 < n < a, got n={n}, a={a}")
        gap = ra - rn
        arg = ratio6 * (tp.omega_minus - x) / gap ** (2.0 / 3.0)
        expo = 0.5 * n * math.log(n / a) + x * math.log1p(-rn / ra) + ra * rn + last
        sign = 1
    else:
        gap = ra + rn
        arg = ratio6 * (x - tp.omega_plus) / gap ** (2.0 / 3.0)
        expo = 0.5 * n * math.log(n / a) + x * math.log1p(rn / ra) - ra * rn + last
        sign = -1 if n % 2 else 1
    ai = airy_ai(arg)
    if ai == 0.0:
        return ZERO
    sign = sign if ai > 0 else -sign
    log_pref = _LOG_SQRT_2PI + math.log(ratio6) + math.log(gap) / 3.0
    return SignedLogReal(sign, log_pref + math.log(abs(ai)) + expo)


def small_n_formula(p, a=None, x=None):
    """``(1 - x/a)^n``."""
    p = _point(p, a, x)
    if p.n == 0:
        return ONE
    base = 1.0 - p.x / p.a
    if base == 0.0:
        return ZERO
    sign = -1 if (base < 0 and p.n % 2) else 1
    return SignedLogReal(sign, p.n * math.log(abs(base)))


def edge_half_widths(n, a, band_width_const=1.0):
    """Half-widths of the Airy bands around ``Omega^-`` and ``Omega^+``."""
    if n == 0:
        return 0.0, 0.0
    rn, ra = math.sqrt(n), math.sqrt(a)
    s = (a / n) ** (1.0 / 6.0)
    return (band_width_const * abs(ra - rn) ** (2.0 / 3.0) * s,
            band_width_const * (ra + rn) ** (2.0 / 3.0) * s)


def classify_charlier(p, band_width_const=1.0, a=None, x=None, small_n_max=2):
    """Which of the six Charlier cases applies at ``(n, a, x)``.

    ``n <= small_n_max`` is SMALL_N; otherwise the Airy bands take priority,
    then the position relative to the turning points decides.
    """
    p = _point(p, a, x)
    n, a, x = p.n, p.a, p.x
    if n <= small_n_max or n == 0:
        return CharlierRegion(CharlierTag.SMALL_N, band_width_const)
    tp = turning_points(n, a)
    w_minus, w_plus = edge_half_widths(n, a, band_width_const)
    ok = n < a
    if abs(x - tp.omega_plus) <= w_plus:
        return CharlierRegion(CharlierTag.NEAR_OMEGA_PLUS, band_width_const)
    if abs(x - tp.omega_minus) <= w_minus:
        return CharlierRegion(CharlierTag.NEAR_OMEGA_MINUS, band_width_const, ok)
    if x > tp.omega_plus:
        return CharlierRegion(CharlierTag.ABOVE_OMEGA_PLUS, band_width_const)
    if x < tp.omega_minus:
        return CharlierRegion(CharlierTag.BELOW_OMEGA_MINUS, band_width_const, ok)
    return CharlierRegion(CharlierTag.OSCILLATORY, band_width_const)


_FORMULAS = {
    CharlierTag.SMALL_N: "small_n",
    CharlierTag.BELOW_OMEGA_MINUS: "f_outer_below",
    CharlierTag.ABOVE_OMEGA_PLUS: "f_outer_above",
    CharlierTag.NEAR_OMEGA_MINUS: "f_airy_minus",
    CharlierTag.OSCILLATORY: "f_oscillatory",
    CharlierTag.NEAR_OMEGA_PLUS: "f_airy_plus",
}


def charlier_eval_asym(p, fidelity=Fidelity.CORRECTED, band_width_const=1.0,
                       small_n_max=2, a=None, x=None):
    """Classify and evaluate; returns ``(value, region, formula_name)``."""
    p = _point(p, a, x)
    region = classify_charlier(p, band_width_const, small_n_max=small_n_max)
    tag = region.tag
    if tag is CharlierTag.SMALL_N:
        value = small_n_formula(p)
    elif tag is CharlierTag.BELOW_OMEGA_MINUS:
        value = f_outer(p, OuterSide.BELOW, fidelity)
    elif tag is CharlierTag.ABOVE_OMEGA_PLUS:
        value = f_outer(p, OuterSide.ABOVE, fidelity)
    elif tag is CharlierTag.NEAR_OMEGA_MINUS:
        value = f_airy_edge(p, EdgeSide.MINUS, fidelity)
    elif tag is CharlierTag.NEAR_OMEGA_PLUS:
        value = f_airy_edge(p, EdgeSide.PLUS, fidelity)
    else:
        value = f_oscillatory(p, fidelity)
    return value, region, _FORMULAS[tag]
