"""Reference evaluations: exact Hermite and Charlier values and Hermite zeros.

Every asymptotic formula in the package is scored against these.  The
explicit sums are carried out in exact rational arithmetic on the binary
value of the float inputs, so the only rounding is the final conversion to
a :class:`~hermasym.logreal.SignedLogReal`.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np

from ._jit import njit
from .logreal import ONE, ZERO, SignedLogReal

__all__ = [
    "HermitePoint",
    "CharlierPoint",
    "CapabilityError",
    "MAX_EXACT_DEGREE",
    "hermite_exact_sum",
    "hermite_recurrence_log",
    "hermite_sign",
    "charlier_exact_sum",
    "hermite_zeros_exact",
]

MAX_EXACT_DEGREE = 400
MAX_ZEROS_DEGREE = 200
_BISECT_CAP = 200


class CapabilityError(ValueError):
    """Request lies outside what the exact oracles support."""


@dataclass(frozen=True)
class HermitePoint:
    n: int
    xi: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise ValueError(f"degree must be a non-negative integer, got {self.n!r}")
        if not math.isfinite(self.xi):
            raise ValueError(f"xi must be finite, got {self.xi!r}")


@dataclass(frozen=True)
class CharlierPoint:
    n: int
    a: float
    x: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise ValueError(f"degree must be a non-negative integer, got {self.n!r}")
        if not self.a > 0:
            raise ValueError(f"Charlier parameter a must be positive, got {self.a!r}")
        if not math.isfinite(self.x):
            raise ValueError(f"x must be finite, got {self.x!r}")


def _as_hermite_point(p, xi=None):
    if isinstance(p, HermitePoint):
        return p
    return HermitePoint(int(p), float(xi))


def _as_charlier_point(p, a=None, x=None):
    if isinstance(p, CharlierPoint):
        return p
    return CharlierPoint(int(p), float(a), float(x))


# ---------------------------------------------------------------------------
# Hermite
# ---------------------------------------------------------------------------


def hermite_coefficients(n):
    """Integer coefficients ``c_k`` of ``H_n(x) = sum_k c_k x^(n-2k)``."""
    fn = math.factorial(n)
    return [
        (-1) ** k * fn // (math.factorial(k) * math.factorial(n - 2 * k)) * 2 ** (n - 2 * k)
        for k in range(n // 2 + 1)
    ]


def hermite_exact_sum(p, xi=None):
    """``H_n(xi)`` from the explicit finite sum, exactly.

    Accepts a :class:`HermitePoint` or ``(n, xi)``.
    """
    p = _as_hermite_point(p, xi)
    n = p.n
    if n > MAX_EXACT_DEGREE:
        raise CapabilityError(f"exact Hermite sum supports n <= {MAX_EXACT_DEGREE}, got {n}")
    flip = n % 2 == 1 and p.xi < 0
    q = Fraction(abs(p.xi))
    num, den = q.numerator, q.denominator
    # H_n(num/den) * den^n as one integer
    total = 0
    for k, c in enumerate(hermite_coefficients(n)):
        total += c * num ** (n - 2 * k) * den ** (2 * k)
    value = SignedLogReal.from_rational(Fraction(total, den**n))
    return -value if flip else value


@njit
def _hermite_recurrence(n, xi):
    # returns (sign, log|H_n(xi)|); log is -inf for an exact zero
    if n == 0:
        return 1.0, 0.0
    h_prev = 1.0
    h_cur = 2.0 * xi
    scale = 0.0
    for k in range(1, n):
        h_next = 2.0 * xi * h_cur - 2.0 * k * h_prev
        h_prev = h_cur
        h_cur = h_next
        m = max(abs(h_cur), abs(h_prev))
        if m > 1e150 or 0.0 < m < 1e-150:
            e = math.log(m)
            f = math.exp(-e)
            h_cur = h_cur * f
            h_prev = h_prev * f
            scale += e
    if h_cur == 0.0:
        return 0.0, -math.inf
    return math.copysign(1.0, h_cur), scale + math.log(abs(h_cur))


def hermite_recurrence_log(p, xi=None):
    """``H_n(xi)`` by the three-term recurrence with running log rescaling."""
    p = _as_hermite_point(p, xi)
    flip = p.n % 2 == 1 and p.xi < 0
    if 0.0 < abs(p.xi) < 1e-150:
        return _hermite_near_origin(p.n, p.xi)
    s, la = _hermite_recurrence(p.n, abs(p.xi))
    if s == 0.0:
        return ZERO
    value = SignedLogReal(int(s), la)
    return -value if flip else value


def _hermite_near_origin(n, xi):
    # xi^2 underflows against 1, so one Taylor term at 0 is exact to rounding:
    # H_2m(0) = (-1)^m (2m)!/m!,  H_2m+1(xi) ~ 2(2m+1) H_2m(0) xi
    m = n // 2
    la = math.lgamma(2 * m + 1) - math.lgamma(m + 1)
    sign = -1 if m % 2 else 1
    if n % 2 == 0:
        return SignedLogReal(sign, la)
    la += math.log(2 * n) + math.log(abs(xi))
    return SignedLogReal(sign if xi > 0 else -sign, la)


@njit
def hermite_sign(n, xi):
    """Sign of ``H_n(xi)`` (-1, 0, 1) from the recurrence."""
    s, _ = _hermite_recurrence(n, xi)
    return s


# ---------------------------------------------------------------------------
# Charlier
# ---------------------------------------------------------------------------


def charlier_exact_sum(p, a=None, x=None, method="rational"):
    """``C_n^(a)(x)`` from the terminating 2F0 sum.

    ``method="rational"`` (default) sums exactly on the binary values of
    ``a`` and ``x``.  ``method="float"`` builds the terms in log form and
    adds them with ``math.fsum`` after sorting by magnitude; it is kept as a
    fast cross-check.
    """
    p = _as_charlier_point(p, a, x)
    if p.n > MAX_EXACT_DEGREE:
        raise CapabilityError(f"exact Charlier sum supports n <= {MAX_EXACT_DEGREE}, got {p.n}")
    if p.n == 0:
        return ONE
    if method == "rational":
        return _charlier_rational(p.n, Fraction(p.a), Fraction(p.x))
    if method == "float":
        return _charlier_float(p.n, p.a, p.x)
    raise ValueError(f"unknown method {method!r}")


def _charlier_rational(n, a, x):
    term = Fraction(1)
    total = Fraction(1)
    for k in range(n):
        # t_{k+1} = t_k (k - n)(k - x) / ((k + 1)(-a))
        term = term * (k - n) * (k - x) / (-(k + 1) * a)
        if term == 0:
            break
        total += term
    return SignedLogReal.from_rational(total)


def _charlier_float(n, a, x):
    signs = []
    logs = []
    s, la = 1, 0.0
    signs.append(s)
    logs.append(la)
    for k in range(n):
        f = (k - n) * (k - x) / (-(k + 1) * a)
        if f == 0.0:
            break
        s = s if f > 0 else -s
        la += math.log(abs(f))
        signs.append(s)
        logs.append(la)
    top = max(logs)
    parts = sorted((sg * math.exp(l - top) for sg, l in zip(signs, logs)), key=abs)
    total = math.fsum(parts)
    if total == 0.0:
        return ZERO
    return SignedLogReal.from_float(total).scale_log(top)


# ---------------------------------------------------------------------------
# Zeros
# ---------------------------------------------------------------------------


@njit
def _bisect_sign(n, lo, hi, s_lo):
    for _ in range(_BISECT_CAP):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        s_mid = hermite_sign(n, mid)
        if s_mid == 0.0:
            return mid
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _positive_brackets(n):
    """Brackets around the positive zeros, largest first, or None."""
    from .zeros import tau_estimates

    m = n // 2
    est = [math.sqrt(2 * n) * math.sin(t) for t in tau_estimates(n)[:m]]
    bound = math.sqrt(2 * n + 1)
    edges = [bound]
    for j in range(m - 1):
        edges.append(0.5 * (est[j] + est[j + 1]))
    # lower edge of the smallest positive zero: the origin, or half-way to it
    edges.append(0.5 * est[m - 1] if n % 2 == 1 else 0.0)
    brackets = list(zip(edges[1:], edges[:-1]))
    for lo, hi in brackets:
        if not lo < hi:
            return None
        s_lo, s_hi = hermite_sign(n, lo), hermite_sign(n, hi)
        if s_lo == 0.0 or s_hi == 0.0 or s_lo == s_hi:
            return None
    return brackets


def _grid_brackets(n):
    m = n // 2
    bound = math.sqrt(2 * n + 1)
    pts = 64 * n + 64
    while True:
        grid = np.linspace(0.0, bound, pts + 1)
        if n % 2 == 1:
            grid = grid[1:]
        signs = [hermite_sign(n, float(g)) for g in grid]
        brackets = []
        for i in range(len(grid) - 1):
            if signs[i] != signs[i + 1] and signs[i] != 0.0 and signs[i + 1] != 0.0:
                brackets.append((float(grid[i]), float(grid[i + 1])))
        if len(brackets) == m:
            return brackets[::-1]
        if pts > 10**6:
            raise RuntimeError(f"could not isolate the zeros of H_{n}")
        pts *= 4


def hermite_zeros_exact(n):
    """All zeros of ``H_n`` in decreasing order, to about ``1e-12``.

    Positive zeros are bracketed with the asymptotic estimates (falling back
    to a uniform grid), bisected on the recurrence sign, and mirrored.
    """
    if int(n) != n or n < 1:
        raise ValueError(f"H_n has zeros only for n >= 1, got {n!r}")
    n = int(n)
    if n > MAX_ZEROS_DEGREE:
        raise CapabilityError(f"exact zeros supported for n <= {MAX_ZEROS_DEGREE}, got {n}")
    if n == 1:
        return [0.0]
    brackets = _positive_brackets(n) or _grid_brackets(n)
    pos = []
    for lo, hi in brackets:
        pos.append(_bisect_sign(n, lo, hi, hermite_sign(n, lo)))
    middle = [0.0] if n % 2 == 1 else []
    return pos + middle + [-z for z in reversed(pos)]
