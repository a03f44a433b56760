"""Airy function Ai on the real line and integer-order Bessel J_k.

These are the only transcendental kernels the asymptotic formulas need.
Both are written as scalar numba kernels (see :mod:`hermasym._jit`) with thin
validating wrappers.

Airy strategy, by argument:

* ``|z| <= 5.5``: the two Maclaurin solutions ``f`` and ``g`` combined as
  ``Ai = Ai(0) f + Ai'(0) g``.
* ``z > 5.5``: the exponentially decaying asymptotic expansion.
* ``-12 <= z < -5.5``: Taylor continuation of ``y'' = z y`` from the origin.
  The oscillatory asymptotic form is only accurate to about ``1e-8`` here.
* ``z < -12``: modulus/phase asymptotic form.

Bessel strategy: ascending series while ``x**2 <= k + 1`` (no cancellation to
speak of), otherwise Miller's downward recurrence normalised with
``J_0 + 2 sum J_2m = 1``.
"""

from dataclasses import dataclass
import math

from ._jit import njit

__all__ = [
    "KernelPolicy",
    "DEFAULT_POLICY",
    "airy_ai",
    "bessel_j",
    "AIRY_AI0",
    "AIRY_AIP0",
]

AIRY_AI0 = 0.35502805388781723926  # 1 / (3^(2/3) Gamma(2/3))
AIRY_AIP0 = -0.25881940379280679840  # -1 / (3^(1/3) Gamma(1/3))

_SQRT_PI = math.sqrt(math.pi)
_MACLAURIN_LIMIT = 5.5
_TAYLOR_LIMIT = 12.0
_TAYLOR_STEP = 0.25
_RESCALE = 1e250


@dataclass(frozen=True)
class KernelPolicy:
    """Accuracy targets shared by the series kernels."""

    target_abs_tol: float = 1e-13
    target_rel_tol: float = 1e-12
    max_terms: int = 500

    def __post_init__(self):
        if not (self.target_abs_tol > 0 and self.target_rel_tol > 0):
            raise ValueError("tolerances must be strictly positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")


DEFAULT_POLICY = KernelPolicy()


# ---------------------------------------------------------------------------
# Airy
# ---------------------------------------------------------------------------


@njit
def _airy_maclaurin(z, abs_tol, max_terms):
    # f = sum 3^k (1/3)_k z^(3k) / (3k)!,  g = sum 3^k (2/3)_k z^(3k+1) / (3k+1)!
    z3 = z * z * z
    tf = 1.0
    tg = z
    f = tf
    g = tg
    thresh = abs_tol * 1e-2
    small = 0
    k = 0
    while k < max_terms:
        k += 1
        tf = tf * z3 / ((3 * k - 1) * (3 * k))
        tg = tg * z3 / ((3 * k) * (3 * k + 1))
        f += tf
        g += tg
        if abs(tf) < thresh and abs(tg) < thresh:
            small += 1
            if small >= 3:
                break
        else:
            small = 0
    return AIRY_AI0 * f + AIRY_AIP0 * g


@njit
def _airy_asym_pos(z):
    zeta = 2.0 / 3.0 * z * math.sqrt(z)
    s = 1.0
    u = 1.0
    prev = 1e300
    k = 0
    while k < 60:
        k += 1
        u = u * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k)
        t = u / zeta**k
        if t >= prev:
            break
        s += -t if k % 2 == 1 else t
        prev = t
        if t < 1e-17:
            break
    return math.exp(-zeta) / (2.0 * _SQRT_PI * z**0.25) * s


@njit
def _airy_asym_neg(x):
    # Ai(-x) for large x > 0
    zeta = 2.0 / 3.0 * x * math.sqrt(x)
    p = 1.0
    q = 0.0
    u = 1.0
    prev = 1e300
    k = 0
    while k < 80:
        k += 1
        u = u * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k)
        t = u / zeta**k
        if t >= prev:
            break
        prev = t
        # odd k feed the sine series, even k the cosine series
        m = k // 2
        sgn = 1.0 if m % 2 == 0 else -1.0
        if k % 2 == 1:
            q += sgn * t
        else:
            p += sgn * t
        if t < 1e-18:
            break
    chi = zeta - 0.25 * math.pi
    return (math.cos(chi) * p + math.sin(chi) * q) / (_SQRT_PI * x**0.25)


@njit
def _airy_taylor_continue(z):
    # integrate y'' = z y from the origin with local Taylor steps
    y = AIRY_AI0
    dy = AIRY_AIP0
    z0 = 0.0
    nsteps = int(math.ceil(abs(z) / _TAYLOR_STEP))
    h = z / nsteps
    for _ in range(nsteps):
        a_mm1 = 0.0
        a_m = y
        a_m1 = dy
        ysum = y + dy * h
        dsum = dy
        hp = h  # h^(m+1) for the derivative series
        hpow = h * h
        small = 0
        m = 0
        while m < 80:
            a_m2 = (z0 * a_m + a_mm1) / ((m + 2) * (m + 1))
            ysum += a_m2 * hpow
            dsum += (m + 2) * a_m2 * hp
            # coefficients can vanish individually, so require a run of them
            if abs(a_m2 * hpow) < 1e-20:
                small += 1
                if small >= 3:
                    break
            else:
                small = 0
            hpow *= h
            hp *= h
            a_mm1 = a_m
            a_m = a_m1
            a_m1 = a_m2
            m += 1
        y = ysum
        dy = dsum
        z0 += h
    return y


@njit
def airy_ai_kernel(z, abs_tol, max_terms):
    if z > 0.0 and z > _MACLAURIN_LIMIT:
        if z > 105.0:
            return 0.0
        return _airy_asym_pos(z)
    if abs(z) <= _MACLAURIN_LIMIT:
        return _airy_maclaurin(z, abs_tol, max_terms)
    if z >= -_TAYLOR_LIMIT:
        return _airy_taylor_continue(z)
    return _airy_asym_neg(-z)


def airy_ai(z, policy=DEFAULT_POLICY):
    """Airy function Ai(z) for real ``z``.

    Absolute error is below ``1e-12`` for ``|z| <= 12``; beyond that the
    asymptotic forms are accurate to a few units in the last place relative
    to the local amplitude.  Underflows to ``0.0`` for very large positive
    ``z``.
    """
    z = float(z)
    if not math.isfinite(z):
        raise ValueError(f"airy_ai requires a finite argument, got {z!r}")
    return airy_ai_kernel(z, policy.target_abs_tol, policy.max_terms)


# ---------------------------------------------------------------------------
# Bessel J_k
# ---------------------------------------------------------------------------


@njit
def _bessel_series(k, x, max_terms):
    half = 0.5 * x
    term = math.exp(k * math.log(half) - math.lgamma(k + 1.0))
    s = term
    q = -half * half
    small = 0
    m = 0
    while m < max_terms:
        m += 1
        term = term * q / (m * (m + k))
        s += term
        if abs(term) <= 1e-17 * abs(s):
            small += 1
            if small >= 3:
                break
        else:
            small = 0
    return s


@njit
def _bessel_miller(k, x):
    big = max(float(k), x)
    start = int(big + 20.0 + math.sqrt(160.0 * big))
    start += start % 2  # even, so the last step lands on an even order
    jp = 0.0  # J_{m+1}
    jc = 1e-300  # J_m, arbitrary small seed
    result = 0.0
    norm = 0.0
    two_over_x = 2.0 / x
    m = start
    while m > 0:
        jm = m * two_over_x * jc - jp
        jp = jc
        jc = jm
        m -= 1
        if abs(jc) > _RESCALE:
            jc /= _RESCALE
            jp /= _RESCALE
            result /= _RESCALE
            norm /= _RESCALE
        if m == k:
            result = jc
        if m % 2 == 0 and m > 0:
            norm += 2.0 * jc
    norm += jc  # J_0 term
    if k == 0:
        result = jc
    return result / norm


@njit
def bessel_j_kernel(k, x, max_terms):
    if x == 0.0:
        return 1.0 if k == 0 else 0.0
    sign = 1.0
    if x < 0.0:
        x = -x
        if k % 2 == 1:
            sign = -1.0
    if x * x <= k + 1.0:
        return sign * _bessel_series(k, x, max_terms)
    return sign * _bessel_miller(k, x)


def bessel_j(k, x, policy=DEFAULT_POLICY):
    """Bessel function of the first kind ``J_k(x)`` for integer ``k >= 0``.

    Negative arguments are reduced with ``J_k(-x) = (-1)^k J_k(x)`` before
    evaluation, so the reflection holds bit for bit.
    """
    if int(k) != k or k < 0:
        raise ValueError(f"bessel_j requires a non-negative integer order, got {k!r}")
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"bessel_j requires a finite argument, got {x!r}")
    return bessel_j_kernel(int(k), x, policy.max_terms)
