"""Overflow-safe real and complex values.

``H_400(25)`` is about ``e^1450``, far outside double range, so every public
value in this package travels as a sign plus the natural log of its magnitude.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

__all__ = ["SignedLogReal", "ComplexLog", "ZERO", "ONE", "MAX_PLAIN_LOG"]

# largest log magnitude for which conversion to a plain float is offered
MAX_PLAIN_LOG = 700.0

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class SignedLogReal:
    """A real number stored as ``sign * exp(log_abs)``.

    ``sign`` is -1, 0 or +1.  When ``sign == 0`` the value is exactly zero and
    ``log_abs`` is ``-inf``.
    """

    sign: int
    log_abs: float

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign!r}")
        if self.sign == 0:
            object.__setattr__(self, "log_abs", -math.inf)
        elif not math.isfinite(self.log_abs):
            raise ValueError("non-zero SignedLogReal needs a finite log magnitude")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_float(cls, x):
        x = float(x)
        if not math.isfinite(x):
            raise ValueError(f"cannot represent {x!r}")
        if x == 0.0:
            return ZERO
        return cls(1 if x > 0 else -1, math.log(abs(x)))

    @classmethod
    def from_rational(cls, q):
        """Exact conversion of an int or Fraction (no intermediate overflow)."""
        q = Fraction(q)
        if q == 0:
            return ZERO
        p, d = abs(q.numerator), q.denominator
        # pull out a power of two so the remaining ratio is a correctly
        # rounded float near 1; log(p) - log(d) would cancel for big ints
        e = p.bit_length() - d.bit_length()
        m = Fraction(p, d << e) if e >= 0 else Fraction(p << -e, d)
        return cls(1 if q > 0 else -1, math.log(float(m)) + e * _LN2)

    @classmethod
    def from_parts(cls, sign, log_abs):
        if sign == 0:
            return ZERO
        return cls(int(math.copysign(1, sign)), float(log_abs))

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return SignedLogReal(-self.sign, self.log_abs)

    def __mul__(self, other):
        other = _coerce(other)
        if self.sign == 0 or other.sign == 0:
            return ZERO
        return SignedLogReal(self.sign * other.sign, self.log_abs + other.log_abs)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.sign == 0:
            raise ZeroDivisionError("division by a zero SignedLogReal")
        if self.sign == 0:
            return ZERO
        return SignedLogReal(self.sign * other.sign, self.log_abs - other.log_abs)

    def __add__(self, other):
        other = _coerce(other)
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        big, small = (self, other) if self.log_abs >= other.log_abs else (other, self)
        ratio = math.exp(small.log_abs - big.log_abs)
        if big.sign == small.sign:
            return SignedLogReal(big.sign, big.log_abs + math.log1p(ratio))
        if ratio == 1.0:
            return ZERO
        return SignedLogReal(big.sign, big.log_abs + math.log1p(-ratio))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __abs__(self):
        return SignedLogReal(abs(self.sign), self.log_abs)

    def scale_log(self, delta):
        """Multiply by ``exp(delta)``."""
        if self.sign == 0:
            return ZERO
        return SignedLogReal(self.sign, self.log_abs + delta)

    # -- inspection -------------------------------------------------------

    @property
    def is_zero(self):
        return self.sign == 0

    def to_float(self):
        """Plain float; only offered while ``log_abs < 700``."""
        if self.sign == 0:
            return 0.0
        if self.log_abs >= MAX_PLAIN_LOG:
            raise OverflowError(f"log magnitude {self.log_abs:.6g} too large for a float")
        return self.sign * math.exp(self.log_abs)

    def __float__(self):
        return self.to_float()

    def rel_err(self, exact):
        """``|self - exact| / |exact|`` without forming either value."""
        exact = _coerce(exact)
        if exact.sign == 0:
            return 0.0 if self.sign == 0 else math.inf
        if self.sign == 0:
            return 1.0
        d = self.log_abs - exact.log_abs
        if self.sign != exact.sign:
            return 1.0 + _safe_exp(d)
        return abs(math.expm1(d)) if d < 709.0 else math.inf

    def __repr__(self):
        return f"SignedLogReal(sign={self.sign}, log_abs={self.log_abs!r})"


@dataclass(frozen=True)
class ComplexLog:
    """A complex number ``exp(log_abs + i*phase)`` with phase in ``(-pi, pi]``."""

    log_abs: float
    phase: float

    def __post_init__(self):
        object.__setattr__(self, "phase", normalize_phase(self.phase))

    @classmethod
    def from_log(cls, w):
        """From a complex logarithm ``w``; the imaginary part may be any size."""
        return cls(w.real, w.imag)

    def conjugate(self):
        return ComplexLog(self.log_abs, -self.phase)

    def to_complex(self):
        r = math.exp(self.log_abs)
        return complex(r * math.cos(self.phase), r * math.sin(self.phase))

    def real_part(self):
        """``Re(z)`` as a SignedLogReal."""
        c = math.cos(self.phase)
        if c == 0.0:
            return ZERO
        return SignedLogReal(1 if c > 0 else -1, self.log_abs + math.log(abs(c)))


def normalize_phase(phi):
    phi = math.fmod(phi, 2.0 * math.pi)
    if phi <= -math.pi:
        phi += 2.0 * math.pi
    elif phi > math.pi:
        phi -= 2.0 * math.pi
    return phi


def _safe_exp(d):
    return math.exp(d) if d < 709.0 else math.inf


def _coerce(x):
    if isinstance(x, SignedLogReal):
        return x
    if isinstance(x, (int, Fraction)):
        return SignedLogReal.from_rational(x)
    return SignedLogReal.from_float(x)


ZERO = SignedLogReal(0, -math.inf)
ONE = SignedLogReal(1, 0.0)
