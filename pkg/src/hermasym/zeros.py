"""Hermite zero estimates from the oscillatory-region phase condition.

The ``j``-th zero of ``H_n`` is approximated by ``sqrt(2n) sin(tau_j)``
where ``tau_j`` solves

    n * (sin(2t)/2 + t - pi/2) + t/2 = pi/2 - j*pi.

With ``E = 2t``, ``M = 2(2A + n pi)/(2n+1)`` and ``eps = -2n/(2n+1)`` this is
Kepler's equation ``E - eps sin E = M``.  Two solvers are provided: a guarded
Newton iteration (default) and the Kapteyn series
``E = M + 2 sum_k J_k(k eps) sin(k M) / k``, which converges slowly because
``|eps| -> 1`` as ``n`` grows.
"""

from dataclasses import dataclass
import enum
import math

import numpy as np

from ._jit import njit
from .specfun import bessel_j_kernel

__all__ = [
    "Method",
    "KeplerProblem",
    "ZeroEstimate",
    "KapteynTruncationError",
    "kepler_newton",
    "kepler_kapteyn",
    "kepler_parameters",
    "phase_residual",
    "default_max_terms",
    "tau_estimates",
    "zero_estimates",
]

_HALF_PI = 0.5 * math.pi
_BESSEL_TERMS = 500


class Method(str, enum.Enum):
    NEWTON = "newton"
    KAPTEYN = "kapteyn"


class KapteynTruncationError(ArithmeticError):
    """The Kapteyn series did not meet its tolerance within ``max_terms``."""

    def __init__(self, message, last_term, terms_used, j=None):
        super().__init__(message)
        self.last_term = last_term
        self.terms_used = terms_used
        self.j = j


@dataclass(frozen=True)
class KeplerProblem:
    M: float
    eps: float
    E: float = math.nan

    def __post_init__(self):
        if not abs(self.eps) < 1.0:
            raise ValueError(f"Kepler eccentricity must satisfy |eps| < 1, got {self.eps!r}")

    @property
    def residual(self):
        return self.E - self.eps * math.sin(self.E) - self.M


@dataclass(frozen=True)
class ZeroEstimate:
    j: int
    n: int
    tau: float
    zeta: float
    method: Method
    residual: float
    terms_used: int = 0
    exact: float = math.nan

    @property
    def abs_err(self):
        return abs(self.zeta - self.exact)


def kepler_parameters(n, j):
    """``(M, eps)`` of the Kepler problem for zero ``j`` of ``H_n``."""
    big_n = 2 * n + 1
    return 2.0 * math.pi * (1 + n - 2 * j) / big_n, -2.0 * n / big_n


def phase_residual(n, j, tau):
    return n * (0.5 * math.sin(2.0 * tau) + tau - _HALF_PI) + 0.5 * tau - (_HALF_PI - j * math.pi)


def default_max_terms(n):
    return min(20 * math.ceil((2 * n + 1) ** 1.5), 10**6)


# ---------------------------------------------------------------------------
# Newton
# ---------------------------------------------------------------------------


@njit
def _kepler_newton(M, eps):
    lo = M - abs(eps)
    hi = M + abs(eps)
    E = M
    for _ in range(100):
        f = E - eps * math.sin(E) - M
        if f == 0.0:
            return E
        if f > 0.0:
            hi = E
        else:
            lo = E
        fp = 1.0 - eps * math.cos(E)
        step = E - f / fp
        if step <= lo or step >= hi:
            step = 0.5 * (lo + hi)
        if abs(step - E) <= 1e-16 * max(1.0, abs(E)):
            return step
        E = step
    return E


def kepler_newton(M, eps):
    """Solve ``E - eps sin E = M`` by Newton with a bisection safeguard."""
    M = float(M)
    eps = float(eps)
    if not abs(eps) < 1.0:
        raise ValueError(f"Kepler eccentricity must satisfy |eps| < 1, got {eps!r}")
    if not math.isfinite(M):
        raise ValueError(f"M must be finite, got {M!r}")
    return _kepler_newton(M, eps)


@njit
def _phase_newton(n, j):
    # g(t) = n(sin(2t)/2 + t - pi/2) + t/2 - (pi/2 - j pi), increasing on [-pi/2, pi/2]
    target = _HALF_PI - j * math.pi
    lo = -_HALF_PI
    hi = _HALF_PI
    t = math.pi * (1 + n - 2 * j) / (2 * n + 1)
    for _ in range(100):
        g = n * (0.5 * math.sin(2.0 * t) + t - _HALF_PI) + 0.5 * t - target
        if g == 0.0:
            return t
        if g > 0.0:
            hi = t
        else:
            lo = t
        c = math.cos(t)
        gp = 2.0 * n * c * c + 0.5
        step = t - g / gp
        if step <= lo or step >= hi:
            step = 0.5 * (lo + hi)
        if abs(step - t) <= 1e-17:
            return step
        t = step
    return t


# ---------------------------------------------------------------------------
# Kapteyn
# ---------------------------------------------------------------------------


@njit
def _kapteyn_kepler(M, eps, tol, max_terms):
    # returns (E, terms_used, last_term, converged)
    E = M
    small = 0
    last = 0.0
    k = 0
    while k < max_terms:
        k += 1
        term = 2.0 * bessel_j_kernel(k, k * eps, _BESSEL_TERMS) * math.sin(k * M) / k
        E += term
        last = abs(term)
        if last < tol:
            small += 1
            if small >= 3:
                return E, k, last, True
        else:
            small = 0
    return E, k, last, False


def kepler_kapteyn(M, eps, tol=1e-12, max_terms=None):
    """Kepler's equation by partial sums of its Kapteyn series.

    Stops once three consecutive terms fall below ``tol``.  Returns
    ``(E, terms_used)``; ``terms_used`` is 0 when every term vanishes (as for
    ``eps == 0``).  Raises :class:`KapteynTruncationError` if ``max_terms``
    is exhausted first.
    """
    eps = float(eps)
    if not abs(eps) < 1.0:
        raise ValueError(f"Kepler eccentricity must satisfy |eps| < 1, got {eps!r}")
    if eps == 0.0:
        return float(M), 0
    if max_terms is None:
        max_terms = min(20 * math.ceil((1.0 - abs(eps)) ** -1.5), 10**6)
    E, used, last, ok = _kapteyn_kepler(float(M), eps, float(tol), int(max_terms))
    if not ok:
        raise KapteynTruncationError(
            f"Kapteyn series not converged after {used} terms (last term {last:.3e})",
            last, used)
    return E, used


@njit
def _reduced_sin(m, big_n):
    # sin(m pi / N) for integer m, reduced exactly so symmetric inputs agree
    m = m % (2 * big_n)
    sgn = 1.0
    if m >= big_n:
        m -= big_n
        sgn = -1.0
    if 2 * m > big_n:
        m = big_n - m
    if m == 0:
        return 0.0
    return sgn * math.sin(math.pi * m / big_n)


@njit
def _kapteyn_taus(n, tol, max_terms):
    big_n = 2 * n + 1
    rho = 1.0 - 1.0 / big_n
    coef = np.empty(max_terms + 1)
    have = 0
    taus = np.empty(n)
    used = np.zeros(n, dtype=np.int64)
    lasts = np.zeros(n)
    ok = np.zeros(n, dtype=np.bool_)
    for j in range(1, n + 1):
        p = 4 * j - 1
        tau = _HALF_PI - _HALF_PI * p / big_n
        small = 0
        k = 0
        last = 0.0
        converged = False
        while k < max_terms:
            k += 1
            if k > have:
                coef[k] = bessel_j_kernel(k, rho * k, _BESSEL_TERMS) / k
                have = k
            term = coef[k] * _reduced_sin(p * k, big_n)
            tau -= term
            last = abs(term)
            if last < tol:
                small += 1
                if small >= 3:
                    converged = True
                    break
            else:
                small = 0
        taus[j - 1] = tau
        used[j - 1] = k
        lasts[j - 1] = last
        ok[j - 1] = converged
    return taus, used, lasts, ok


# ---------------------------------------------------------------------------
# Public tables
# ---------------------------------------------------------------------------


def _check_degree(n):
    if int(n) != n or n < 1:
        raise ValueError(f"zero estimates need n >= 1, got {n!r}")
    return int(n)


def _tau_rows(n, method, tol, max_terms):
    method = Method(method)
    if method is Method.NEWTON:
        return [(_phase_newton(n, j), 0) for j in range(1, n + 1)]
    if max_terms is None:
        max_terms = default_max_terms(n)
    taus, used, lasts, ok = _kapteyn_taus(n, float(tol), int(max_terms))
    for j in range(n):
        if not ok[j]:
            raise KapteynTruncationError(
                f"Kapteyn series for tau_{j + 1} of H_{n} not converged after "
                f"{int(used[j])} terms (last term {lasts[j]:.3e})",
                float(lasts[j]), int(used[j]), j=j + 1)
    return [(float(t), int(u)) for t, u in zip(taus, used)]


def tau_estimates(n, method=Method.NEWTON, tol=1e-12, max_terms=None):
    """Phase values ``tau_1 > ... > tau_n`` locating the zeros of ``H_n``."""
    n = _check_degree(n)
    return [t for t, _ in _tau_rows(n, method, tol, max_terms)]


def zero_estimates(n, method=Method.NEWTON, tol=1e-12, max_terms=None, polish=False):
    """Table of :class:`ZeroEstimate` rows for ``H_n``.

    With ``polish=True`` the true zeros are attached in the ``exact`` field.
    """
    n = _check_degree(n)
    method = Method(method)
    rows = _tau_rows(n, method, tol, max_terms)
    exact = [math.nan] * n
    if polish:
        from .exactpoly import hermite_zeros_exact

        exact = hermite_zeros_exact(n)
    scale = math.sqrt(2 * n)
    return [
        ZeroEstimate(j=j, n=n, tau=tau, zeta=scale * math.sin(tau), method=method,
                     residual=phase_residual(n, j, tau), terms_used=used, exact=exact[j - 1])
        for j, (tau, used) in enumerate(rows, start=1)
    ]
