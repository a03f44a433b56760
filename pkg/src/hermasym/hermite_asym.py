"""Large-degree approximations of ``H_n(xi)`` in the six regions.

Regions are separated by the turning points ``xi = +-sqrt(2n)``:

========  ===========================  ====================================
tag       where                        formula
========  ===========================  ====================================
I         any (on request only)        ``(2 xi)^n``
II        ``xi < -sqrt(2n)``           ``(-1)^n exp(Phi_1) U_1``
III       ``xi > sqrt(2n)``            ``exp(Phi_2) U_2``
IV        ``xi ~ -sqrt(2n)``           Airy form, left edge
V         ``xi ~ sqrt(2n)``            Airy form, right edge
VI        ``|xi| < sqrt(2n)``          amplitude times ``cos(Theta)``
========  ===========================  ====================================
"""

from dataclasses import dataclass
import cmath
import enum
import math

from .fidelity import Fidelity
from .logreal import ONE, ZERO, ComplexLog, SignedLogReal
from .specfun import airy_ai

__all__ = [
    "Side",
    "RegionTag",
    "HermiteRegion",
    "AsymResult",
    "sigma",
    "lambda_outer",
    "lambda_airy",
    "lambda_oscillatory",
    "lambda_osc_complex_pair",
    "monomial_regime",
    "szego_leading",
    "classify_hermite",
    "hermite_eval_asym",
]

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_LOG_SQRT2 = 0.5 * math.log(2.0)


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class RegionTag(str, enum.Enum):
    I_SMALL_N = "I"
    II_LEFT_OUTER = "II"
    III_RIGHT_OUTER = "III"
    IV_LEFT_AIRY = "IV"
    V_RIGHT_AIRY = "V"
    VI_OSCILLATORY = "VI"


@dataclass(frozen=True)
class HermiteRegion:
    tag: RegionTag
    airy_band_width: float = 1.0


@dataclass(frozen=True)
class AsymResult:
    value: SignedLogReal
    region: HermiteRegion
    formula: str


def _parity(n):
    return -1 if n % 2 else 1


def sigma(n, xi):
    """``sqrt(xi^2 - 2n)``; only real outside the oscillatory band."""
    r = xi * xi - 2.0 * n
    if r < 0:
        raise ValueError(
            f"sigma is imaginary for |xi| < sqrt(2n) (n={n}, xi={xi}); "
            "use lambda_oscillatory inside the band")
    return math.sqrt(r)


def _outer_right(n, t):
    # Phi_2 and U_2 at t > sqrt(2n); t^2 - sigma t rewritten as 2 n t / (t + sigma)
    s = sigma(n, t)
    phi = n * math.log(s + t) + 0.5 * (2.0 * n * t / (t + s) - n)
    log_u = 0.5 * math.log(0.5 * (1.0 + t / s))
    return phi + log_u


def lambda_outer(n, xi, side):
    """Outer-region form: ``Lambda_1`` (LEFT) or ``Lambda_2`` (RIGHT).

    LEFT is evaluated as the RIGHT core at ``-xi`` times ``(-1)^n``; the two
    expressions are algebraically identical and this keeps the reflection
    exact in floating point.
    """
    side = Side(side)
    if n == 0:
        return ONE
    root = math.sqrt(2.0 * n)
    if side is Side.RIGHT:
        if not xi > root:
            raise ValueError(f"RIGHT outer form needs xi > sqrt(2n) = {root:.6g}, got {xi}")
        return SignedLogReal(1, _outer_right(n, xi))
    if not xi < -root:
        raise ValueError(f"LEFT outer form needs xi < -sqrt(2n) = {-root:.6g}, got {xi}")
    return SignedLogReal(_parity(n), _outer_right(n, -xi))


def _airy_right(n, t, fidelity):
    root = math.sqrt(2.0 * n)
    base = 0.5 * n * math.log(2.0 * n) - 1.5 * n
    # printed text repeats the left-edge sign here
    phi = base + t * root if fidelity is Fidelity.CORRECTED else base - t * root
    n6 = n ** (1.0 / 6.0)
    ai = airy_ai(n6 * math.sqrt(2.0) * (t - root))
    if ai == 0.0:
        return ZERO
    return SignedLogReal(1 if ai > 0 else -1,
                         _LOG_SQRT_2PI + math.log(n6) + phi + math.log(abs(ai)))


def lambda_airy(n, xi, side, fidelity=Fidelity.CORRECTED):
    """Turning-point form: ``Lambda_3`` (LEFT) or ``Lambda_4`` (RIGHT)."""
    side = Side(side)
    fidelity = Fidelity.parse(fidelity)
    if n < 1:
        raise ValueError("the Airy forms need n >= 1")
    if side is Side.RIGHT:
        return _airy_right(n, xi, fidelity)
    # Phi_3(xi) = base - xi sqrt(2n) is the corrected right core at -xi
    v = _airy_right(n, -xi, Fidelity.CORRECTED)
    return -v if n % 2 else v


def _osc_parts(n, xi):
    root = math.sqrt(2.0 * n)
    if not abs(xi) < root:
        raise ValueError(f"oscillatory form needs |xi| < sqrt(2n) = {root:.6g}, got {xi}")
    u = xi / root
    log_amp = (_LOG_SQRT2 - 0.25 * math.log1p(-u * u)
               + 0.5 * n * (math.log(2.0 * n) - 1.0) + 0.5 * xi * xi)
    # Theta = A - n pi/2
    a = 0.5 * xi * math.sqrt(2.0 * n - xi * xi) + (n + 0.5) * math.asin(u)
    return log_amp, a


def _cos_shifted(n, y):
    # cos(y - n pi/2) == cos(n pi/2 - y), resolved by n mod 4 so parity zeros are exact
    r = n % 4
    if r == 0:
        return math.cos(y)
    if r == 1:
        return math.sin(y)
    if r == 2:
        return -math.cos(y)
    return -math.sin(y)


def _from_log_and_factor(log_amp, c):
    if c == 0.0:
        return ZERO
    return SignedLogReal(1 if c > 0 else -1, log_amp + math.log(abs(c)))


def lambda_oscillatory(n, xi):
    """Oscillatory form ``Lambda_5`` for ``|xi| < sqrt(2n)``."""
    log_amp, a = _osc_parts(n, xi)
    return _from_log_and_factor(log_amp, _cos_shifted(n, a))


def lambda_osc_complex_pair(n, xi):
    """The two complex branches ``Lambda_1``, ``Lambda_2`` inside the band.

    Computed directly from the outer formulas with the imaginary root
    ``sigma = i sqrt(2n - xi^2)`` and principal-branch logs; their sum is
    real and reproduces :func:`lambda_oscillatory`.
    """
    root = math.sqrt(2.0 * n)
    if not abs(xi) < root:
        raise ValueError(f"oscillatory form needs |xi| < sqrt(2n) = {root:.6g}, got {xi}")
    c = math.sqrt(2.0 * n - xi * xi)
    s = 1j * c
    # sigma - xi = i (c + i xi): take the quarter turn out as an exact integer
    w = complex(c, xi)
    u1 = cmath.sqrt(0.5 * (1.0 - xi / s))
    log1 = n * cmath.log(w) + 0.5 * (xi * xi + s * xi - n) + cmath.log(u1)
    # i pi n / 2 from the quarter turns, plus i pi n from (-1)^n
    q1 = (n + 2 * n * (n % 2)) % 4
    log1 += 1j * (q1 * 0.5 * math.pi)
    # Lambda_2 is the same construction with xi -> -xi and no sign factor
    w2 = complex(c, -xi)
    u2 = cmath.sqrt(0.5 * (1.0 + xi / s))
    log2 = n * cmath.log(w2) + 0.5 * (xi * xi - s * xi - n) + cmath.log(u2)
    log2 += 1j * ((n % 4) * 0.5 * math.pi)
    return ComplexLog.from_log(log1), ComplexLog.from_log(log2)


def complex_pair_sum(pair):
    """Real sum of a conjugate ComplexLog pair, as a SignedLogReal."""
    z1, z2 = pair
    c = math.cos(z1.phase) * math.exp(z1.log_abs - max(z1.log_abs, z2.log_abs)) + \
        math.cos(z2.phase) * math.exp(z2.log_abs - max(z1.log_abs, z2.log_abs))
    return _from_log_and_factor(max(z1.log_abs, z2.log_abs), c)


def monomial_regime(n, xi):
    """``(2 xi)^n``, exact for ``n = 0, 1``."""
    if n == 0:
        return ONE
    if xi == 0:
        return ZERO
    sign = -1 if (xi < 0 and n % 2) else 1
    return SignedLogReal(sign, n * math.log(2.0 * abs(xi)))


def szego_leading(n, xi):
    """Leading term of the oscillatory form for ``|xi|`` small against ``sqrt(2n)``."""
    if n < 1:
        raise ValueError("szego_leading needs n >= 1")
    log_amp = _LOG_SQRT2 + 0.5 * n * (math.log(2.0 * n) - 1.0) + 0.5 * xi * xi
    return _from_log_and_factor(log_amp, _cos_shifted(n, xi * math.sqrt(2.0 * n)))


def airy_half_width(n, airy_band_width=1.0):
    return airy_band_width * n ** (-1.0 / 6.0) / math.sqrt(2.0)


def classify_hermite(n, xi, airy_band_width=1.0):
    """Region of ``(n, xi)``.  Region I is never chosen here except for n = 0."""
    if n == 0:
        return HermiteRegion(RegionTag.I_SMALL_N, airy_band_width)
    root = math.sqrt(2.0 * n)
    w = airy_half_width(n, airy_band_width)
    if abs(xi - root) <= w:
        tag = RegionTag.V_RIGHT_AIRY
    elif abs(xi + root) <= w:
        tag = RegionTag.IV_LEFT_AIRY
    elif xi > root:
        tag = RegionTag.III_RIGHT_OUTER
    elif xi < -root:
        tag = RegionTag.II_LEFT_OUTER
    else:
        tag = RegionTag.VI_OSCILLATORY
    return HermiteRegion(tag, airy_band_width)


_FORMULAS = {
    RegionTag.I_SMALL_N: "monomial",
    RegionTag.II_LEFT_OUTER: "lambda_outer",
    RegionTag.III_RIGHT_OUTER: "lambda_outer",
    RegionTag.IV_LEFT_AIRY: "lambda_airy",
    RegionTag.V_RIGHT_AIRY: "lambda_airy",
    RegionTag.VI_OSCILLATORY: "lambda_oscillatory",
}


def hermite_eval_asym(n, xi, fidelity=Fidelity.CORRECTED, airy_band_width=1.0,
                      forced_region=None):
    """Evaluate the regional approximation to ``H_n(xi)``.

    Returns an :class:`AsymResult` naming the region and formula used.  A
    ``forced_region`` bypasses the classifier but not the formula's own
    preconditions (violations raise ``ValueError``).
    """
    fidelity = Fidelity.parse(fidelity)
    if forced_region is None:
        if n < 1:
            raise ValueError("automatic dispatch needs n >= 1; force region I for n = 0")
        tag = classify_hermite(n, xi, airy_band_width).tag
    else:
        tag = RegionTag(forced_region)
    if tag is RegionTag.I_SMALL_N:
        value = monomial_regime(n, xi)
    elif tag is RegionTag.II_LEFT_OUTER:
        value = lambda_outer(n, xi, Side.LEFT)
    elif tag is RegionTag.III_RIGHT_OUTER:
        value = lambda_outer(n, xi, Side.RIGHT)
    elif tag is RegionTag.IV_LEFT_AIRY:
        value = lambda_airy(n, xi, Side.LEFT, fidelity)
    elif tag is RegionTag.V_RIGHT_AIRY:
        value = lambda_airy(n, xi, Side.RIGHT, fidelity)
    else:
        value = lambda_oscillatory(n, xi)
    return AsymResult(value, HermiteRegion(tag, airy_band_width), _FORMULAS[tag])
