"""
Certified midpoint-radius numbers.

BallReal and BallComplex wrap mpmath interval values. Every operation is
rounded outward, so the exact result is always contained in the enclosure.
Working precision is a property of the calling context and is set with
``working_precision``; the ``precision`` attribute of a ball records the bits
it was produced at.
"""

from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction
from typing import Any, Dict, Iterator, Optional, Union

from mpmath import iv, mp
from mpmath.libmp import prec_to_dps, to_str

from .exceptions import CannotDivideError, DomainError, InvalidInputError

DEFAULT_PRECISION = 128
GUARD_BITS = 32

RealLike = Union["BallReal", int, Fraction, float, str]


@contextmanager
def working_precision(bits: int) -> Iterator[int]:
    """Run a block with the interval (and point) contexts at ``bits`` bits."""
    if bits < 2:
        raise InvalidInputError(f"precision must be at least 2 bits, got {bits}")
    saved_iv, saved_mp = iv.prec, mp.prec
    iv.prec = bits
    mp.prec = bits
    try:
        yield bits
    finally:
        iv.prec = saved_iv
        mp.prec = saved_mp


def to_interval(value: Any):
    """Convert an exact scalar or a ball to an outward-rounded mpmath interval."""
    if isinstance(value, BallReal):
        return value.interval
    if isinstance(value, bool):
        raise InvalidInputError("booleans are not numbers here")
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return iv.mpf(value.numerator)
        return iv.mpf(value.numerator) / value.denominator
    if isinstance(value, (int, float, str)) or hasattr(value, "_mpf_"):
        return iv.mpf(value)
    if hasattr(value, "_mpi_"):
        return value
    raise InvalidInputError(f"cannot convert {type(value).__name__} to a real ball")


def _endpoint(raw) -> Any:
    return mp.make_mpf(raw)


def _lo(value: Any):
    return _endpoint(to_interval(value)._mpi_[0])


def _hi(value: Any):
    return _endpoint(to_interval(value)._mpi_[1])


class BallReal:
    """A real number enclosure [midpoint - radius, midpoint + radius]."""

    __slots__ = ("interval", "precision")

    def __init__(self, value: Any = 0, precision: Optional[int] = None):
        self.interval = to_interval(value)
        self.precision = int(precision) if precision is not None else iv.prec

    @classmethod
    def from_bounds(cls, lower: Any, upper: Any) -> "BallReal":
        return cls(iv.mpf((_lo(lower), _hi(upper))))

    @classmethod
    def from_mid_rad(cls, midpoint: Any, radius: Any) -> "BallReal":
        mid = to_interval(midpoint)
        rad = _hi(radius)
        if rad < 0:
            raise InvalidInputError("radius must be non-negative")
        return cls(mid + iv.mpf((-rad, rad)))

    # endpoints

    @property
    def lower(self):
        return _endpoint(self.interval._mpi_[0])

    @property
    def upper(self):
        return _endpoint(self.interval._mpi_[1])

    @property
    def midpoint(self):
        total = mp.fadd(self.lower, self.upper, exact=True)
        return mp.ldexp(total, -1)

    @property
    def radius(self):
        return mp.fsub(self.upper, self.midpoint, exact=True)

    def magnitude(self):
        """Upper bound for |x|."""
        return max(abs(self.lower), abs(self.upper))

    def mignitude(self):
        """Lower bound for |x|."""
        if self.contains_zero():
            return mp.zero
        return min(abs(self.lower), abs(self.upper))

    def is_finite(self) -> bool:
        return bool(mp.isfinite(self.lower) and mp.isfinite(self.upper))

    # predicates

    def contains_zero(self) -> bool:
        return self.lower <= 0 <= self.upper

    def contains(self, value: Any) -> bool:
        other = to_interval(value)
        return self.lower <= _lo(other) and _hi(other) <= self.upper

    def is_positive(self) -> bool:
        return self.lower > 0

    def is_negative(self) -> bool:
        return self.upper < 0

    def certainly_lt(self, other: Any) -> bool:
        return self.upper < _lo(other)

    def certainly_le(self, other: Any) -> bool:
        return self.upper <= _lo(other)

    def certainly_gt(self, other: Any) -> bool:
        return self.lower > _hi(other)

    def overlaps(self, other: Any) -> bool:
        return not (self.upper < _lo(other) or _hi(other) < self.lower)

    # constructions

    def widen(self, radius: Any) -> "BallReal":
        r = _hi(abs(to_interval(radius)))
        return BallReal(self.interval + iv.mpf((-r, r)))

    def hull(self, other: Any) -> "BallReal":
        return BallReal(iv.mpf((min(self.lower, _lo(other)), max(self.upper, _hi(other)))))

    # arithmetic

    def __neg__(self) -> "BallReal":
        return BallReal(-self.interval)

    def __pos__(self) -> "BallReal":
        return self

    def __add__(self, other: Any):
        if isinstance(other, BallComplex):
            return NotImplemented
        return BallReal(self.interval + to_interval(other))

    __radd__ = __add__

    def __sub__(self, other: Any):
        if isinstance(other, BallComplex):
            return NotImplemented
        return BallReal(self.interval - to_interval(other))

    def __rsub__(self, other: Any):
        return BallReal(to_interval(other) - self.interval)

    def __mul__(self, other: Any):
        if isinstance(other, BallComplex):
            return NotImplemented
        return BallReal(self.interval * to_interval(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Any):
        if isinstance(other, BallComplex):
            return NotImplemented
        den = to_interval(other)
        if _lo(den) <= 0 <= _hi(den):
            raise CannotDivideError("divisor enclosure contains zero")
        return BallReal(self.interval / den)

    def __rtruediv__(self, other: Any):
        if self.contains_zero():
            raise CannotDivideError("divisor enclosure contains zero")
        return BallReal(to_interval(other) / self.interval)

    def __pow__(self, exponent: int) -> "BallReal":
        if not isinstance(exponent, int):
            raise InvalidInputError("only integer powers of balls are supported")
        if exponent < 0 and self.contains_zero():
            raise CannotDivideError("negative power of an enclosure containing zero")
        return BallReal(self.interval ** exponent)

    def square(self) -> "BallReal":
        return BallReal(self.interval ** 2)

    def __abs__(self) -> "BallReal":
        return BallReal(abs(self.interval))

    def exp(self) -> "BallReal":
        return BallReal(iv.exp(self.interval))

    def log(self) -> "BallReal":
        if self.upper <= 0:
            raise DomainError("logarithm of a non-positive number")
        if not self.is_positive():
            raise CannotDivideError("logarithm argument enclosure contains zero")
        return BallReal(iv.ln(self.interval))

    def sqrt(self) -> "BallReal":
        if self.upper < 0:
            raise DomainError("square root of a negative number")
        if self.lower < 0:
            raise CannotDivideError("square root argument enclosure straddles zero")
        return BallReal(iv.sqrt(self.interval))

    def cos(self) -> "BallReal":
        return BallReal(iv.cos(self.interval))

    def sin(self) -> "BallReal":
        return BallReal(iv.sin(self.interval))

    # conversions

    def __float__(self) -> float:
        return float(self.midpoint)

    def nstr(self, digits: int = 12) -> str:
        return mp.nstr(self.midpoint, digits)

    def __repr__(self) -> str:
        return f"BallReal({self.nstr(15)} +/- {mp.nstr(self.radius, 3)}, bits={self.precision})"

    def to_dict(self) -> Dict[str, Any]:
        """Decimal form {mid, rad, bits}; the decimal ball still encloses the value."""
        mid = self.midpoint
        dps = prec_to_dps(max(self.precision, 53)) + 3
        mid_text = to_str(mid._mpf_, dps)
        rounding_error = mp.fmul(abs(mid), mp.mpf(10) ** (1 - dps), prec=64, rounding="c")
        total = mp.fadd(self.radius, rounding_error, prec=64, rounding="c")
        if total == 0:
            rad_text = "0.0"
        else:
            padded = mp.fmul(total, 1 + mp.ldexp(1, -10), prec=64, rounding="c")
            rad_text = to_str(padded._mpf_, 6)
        return {"mid": mid_text, "rad": rad_text, "bits": int(self.precision)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BallReal":
        bits = int(data.get("bits", DEFAULT_PRECISION))
        with working_precision(bits):
            ball = cls.from_mid_rad(str(data["mid"]), str(data["rad"]))
        ball.precision = bits
        return ball


class BallComplex:
    """A complex enclosure stored as a pair of real balls."""

    __slots__ = ("re", "im")

    def __init__(self, re: Any = 0, im: Any = 0):
        self.re = re if isinstance(re, BallReal) else BallReal(re)
        self.im = im if isinstance(im, BallReal) else BallReal(im)

    @classmethod
    def unit_root(cls, m: int, n: int) -> "BallComplex":
        """exp(2 pi i m / n), exact for the eight-fold symmetric points."""
        if n <= 0:
            raise InvalidInputError("root of unity order must be positive")
        m %= n
        if m == 0:
            return cls(1, 0)
        if 2 * m == n:
            return cls(-1, 0)
        if 4 * m == n:
            return cls(0, 1)
        if 4 * m == 3 * n:
            return cls(0, -1)
        theta = 2 * iv.pi * m / n
        return cls(BallReal(iv.cos(theta)), BallReal(iv.sin(theta)))

    @property
    def precision(self) -> int:
        return min(self.re.precision, self.im.precision)

    def contains_zero(self) -> bool:
        return self.re.contains_zero() and self.im.contains_zero()

    def conjugate(self) -> "BallComplex":
        return BallComplex(self.re, -self.im)

    def real_widened(self) -> BallReal:
        """Real part, widened by the imaginary width, for sums known to be real."""
        return self.re.widen(self.im.magnitude())

    def _coerce(self, other: Any) -> "BallComplex":
        if isinstance(other, BallComplex):
            return other
        return BallComplex(other, 0)

    def __neg__(self) -> "BallComplex":
        return BallComplex(-self.re, -self.im)

    def __add__(self, other: Any) -> "BallComplex":
        o = self._coerce(other)
        return BallComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "BallComplex":
        o = self._coerce(other)
        return BallComplex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Any) -> "BallComplex":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "BallComplex":
        if not isinstance(other, BallComplex):
            scale = to_interval(other)
            return BallComplex(BallReal(self.re.interval * scale), BallReal(self.im.interval * scale))
        a, b = self.re.interval, self.im.interval
        c, d = other.re.interval, other.im.interval
        return BallComplex(BallReal(a * c - b * d), BallReal(a * d + b * c))

    __rmul__ = __mul__

    def abs_squared(self) -> BallReal:
        return BallReal(self.re.interval ** 2 + self.im.interval ** 2)

    def __abs__(self) -> BallReal:
        return self.abs_squared().sqrt()

    def __truediv__(self, other: Any) -> "BallComplex":
        o = self._coerce(other)
        norm = o.abs_squared()
        if norm.contains_zero():
            raise CannotDivideError("complex divisor enclosure contains zero")
        return (self * o.conjugate()) * (1 / norm)

    def __rtruediv__(self, other: Any) -> "BallComplex":
        return self._coerce(other) / self

    def log(self) -> "BallComplex":
        """Principal logarithm."""
        if self.contains_zero():
            raise CannotDivideError("logarithm argument enclosure contains zero")
        value = iv.ln(iv.mpc(self.re.interval, self.im.interval))
        return BallComplex(BallReal(value.real), BallReal(value.imag))

    def __repr__(self) -> str:
        return f"BallComplex({self.re!r}, {self.im!r})"

    def to_dict(self) -> Dict[str, Any]:
        return {"re": self.re.to_dict(), "im": self.im.to_dict()}


def ball_pi() -> BallReal:
    return BallReal(+iv.pi)


def ball_sum(values) -> BallReal:
    total = iv.mpf(0)
    for value in values:
        total += to_interval(value)
    return BallReal(total)


def exact_real(value: Any) -> Union[Fraction, BallReal]:
    """
    Read a user-facing constant exactly.

    Floats are taken at their shortest decimal representation (6.4355 means
    64355/10000, not the nearest double); balls pass through unchanged.
    """
    if isinstance(value, BallReal):
        return value
    if isinstance(value, bool):
        raise InvalidInputError("booleans are not numbers here")
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, (int, str, Fraction)):
        try:
            return Fraction(value)
        except ValueError as e:
            raise InvalidInputError(f"not a number: {value!r}") from e
    raise InvalidInputError(f"cannot read {type(value).__name__} as a real constant")


def describe(value: Any) -> str:
    """Short decimal text for report parameters."""
    if isinstance(value, BallReal):
        return value.nstr(12)
    if isinstance(value, Fraction) and value.denominator != 1:
        return mp.nstr(mp.mpf(value.numerator) / value.denominator, 12)
    return str(value)
