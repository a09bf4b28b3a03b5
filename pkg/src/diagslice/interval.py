"""Directed-rounding interval arithmetic on IEEE-754 doubles.

An :class:`Interval` is a closed interval [lo, hi] with finite double
endpoints.  Every operation returns an interval that contains the exact
mathematical image of its inputs (fundamental containment).  Outward
rounding is obtained portably, without touching the FPU rounding mode:

* addition/subtraction use the TwoSum error-free transformation to decide
  whether the rounded result is exact or needs a one-ulp nudge toward the
  relevant infinity;
* multiplication, division and sqrt nudge by one ulp via ``math.nextafter``
  (a round-to-nearest result is within half an ulp of the truth, so the
  neighbouring double is a valid directed bound), with products/quotients
  that round to zero handled by operand signs so that exact zeros stay
  exact;
* the elementary functions exp/ln/sin/cos are argument-reduction + Taylor
  kernels with an explicit Lagrange remainder folded into the result,
  because library functions carry no error guarantee.

This module is the one place where the rounding strategy lives.
"""

from __future__ import annotations

import math
import sys
from decimal import Decimal, ROUND_CEILING, ROUND_FLOOR, localcontext
from fractions import Fraction

__all__ = [
    "Interval",
    "IntervalDomainError",
    "SoundnessError",
    "EmptyIntersectionError",
    "PI",
    "LN2",
    "exp",
    "ln",
    "sqrt",
    "sin",
    "cos",
    "pow_int",
    "hull",
    "intersect",
    "overlaps",
    "subdivide",
    "format_outward",
]

_INF = math.inf
_MAX = sys.float_info.max
_nextafter = math.nextafter
_TINY = 5e-324  # smallest positive subnormal double


class IntervalDomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


class SoundnessError(RuntimeError):
    """An internal consistency check of the rigorous computation failed.

    This must never be caught and "repaired": it means two supposedly
    compatible enclosures disagree, i.e. a bug somewhere in the chain.
    """


class EmptyIntersectionError(SoundnessError):
    """Two enclosures of the same quantity do not overlap."""

    def __init__(self, a, b, context=""):
        self.a = a
        self.b = b
        msg = f"empty intersection of {a} and {b}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


# ---------------------------------------------------------------------------
# directed endpoint primitives
# ---------------------------------------------------------------------------


def _sum_down(a, b):
    # TwoSum: err is the exact rounding error of a+b, so the direction of
    # the true sum relative to the rounded one is known precisely.
    s = a + b
    t = s - a
    if (a - (s - t)) + (b - t) < 0.0:
        return _nextafter(s, -_INF)
    return s


def _sum_up(a, b):
    s = a + b
    t = s - a
    if (a - (s - t)) + (b - t) > 0.0:
        return _nextafter(s, _INF)
    return s


def _mul_down(a, b):
    p = a * b
    if p == 0.0:
        if a == 0.0 or b == 0.0:
            return 0.0
        # underflow: sign of the exact product decides the bound
        return 0.0 if (a > 0.0) == (b > 0.0) else -_TINY
    return _nextafter(p, -_INF)


def _mul_up(a, b):
    p = a * b
    if p == 0.0:
        if a == 0.0 or b == 0.0:
            return 0.0
        return _TINY if (a > 0.0) == (b > 0.0) else 0.0
    return _nextafter(p, _INF)


def _div_down(a, b):
    q = a / b
    if q == 0.0:
        if a == 0.0:
            return 0.0
        return 0.0 if (a > 0.0) == (b > 0.0) else -_TINY
    return _nextafter(q, -_INF)


def _div_up(a, b):
    q = a / b
    if q == 0.0:
        if a == 0.0:
            return 0.0
        return _TINY if (a > 0.0) == (b > 0.0) else 0.0
    return _nextafter(q, _INF)


def _sqrt_down(x):
    r = math.sqrt(x)
    if r == 0.0:
        return 0.0
    return max(0.0, _nextafter(r, -_INF))


def _sqrt_up(x):
    r = math.sqrt(x)
    if r == 0.0:
        return 0.0
    return _nextafter(r, _INF)


def _float_down(n):
    """Largest double <= the exact integer or Fraction n."""
    f = float(n)
    return _nextafter(f, -_INF) if Fraction(f) > Fraction(n) else f


class Interval:
    """Closed interval [lo, hi] of finite doubles, lo <= hi."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        lo = float(lo)
        hi = float(hi)
        if not (-_MAX <= lo <= hi <= _MAX):
            raise IntervalDomainError(f"invalid interval endpoints [{lo!r}, {hi!r}]")
        self.lo = lo
        self.hi = hi

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_fraction(cls, fr):
        """Tightest interval containing an exact rational."""
        fr = Fraction(fr)
        f = float(fr)  # round-to-nearest (exact big-int division in CPython)
        if math.isinf(f):
            raise IntervalDomainError(f"rational {fr} out of double range")
        ff = Fraction(f)
        lo = _nextafter(f, -_INF) if ff > fr else f
        hi = _nextafter(f, _INF) if ff < fr else f
        return _mk(lo, hi)

    @classmethod
    def from_int(cls, n):
        if -(1 << 53) <= n <= (1 << 53):
            f = float(n)
            return _mk(f, f)
        return cls.from_fraction(Fraction(n))

    # -- basic queries -------------------------------------------------------

    @property
    def width(self):
        return _sum_up(self.hi, -self.lo)

    @property
    def mid(self):
        return 0.5 * (self.lo + self.hi)

    @property
    def mag(self):
        """Largest absolute value attained on the interval."""
        return max(-self.lo, self.hi)

    def contains(self, x):
        """True when the point (float, int, or Fraction) lies inside."""
        if isinstance(x, Fraction):
            return Fraction(self.lo) <= x <= Fraction(self.hi)
        return self.lo <= x <= self.hi

    __contains__ = contains

    def encloses(self, other):
        return self.lo <= other.lo and other.hi <= self.hi

    def strictly_positive(self):
        return self.lo > 0.0

    def abs(self):
        if self.lo >= 0.0:
            return self
        if self.hi <= 0.0:
            return _mk(-self.hi, -self.lo)
        return _mk(0.0, max(-self.lo, self.hi))

    def __repr__(self):
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __eq__(self, other):
        return isinstance(other, Interval) and self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Interval):
            return _mk(_sum_down(self.lo, other.lo), _sum_up(self.hi, other.hi))
        v = float(other)
        return _mk(_sum_down(self.lo, v), _sum_up(self.hi, v))

    __radd__ = __add__

    def __neg__(self):
        return _mk(-self.hi, -self.lo)

    def __sub__(self, other):
        if isinstance(other, Interval):
            return _mk(_sum_down(self.lo, -other.hi), _sum_up(self.hi, -other.lo))
        v = float(other)
        return _mk(_sum_down(self.lo, -v), _sum_up(self.hi, -v))

    def __rsub__(self, other):
        v = float(other)
        return _mk(_sum_down(v, -self.hi), _sum_up(v, -self.lo))

    def __mul__(self, other):
        a, b = self.lo, self.hi
        if isinstance(other, Interval):
            c, d = other.lo, other.hi
        else:
            c = d = float(other)
        if a >= 0.0:
            if c >= 0.0:
                return _mk(_mul_down(a, c), _mul_up(b, d))
            if d <= 0.0:
                return _mk(_mul_down(b, c), _mul_up(a, d))
            return _mk(_mul_down(b, c), _mul_up(b, d))
        if b <= 0.0:
            if c >= 0.0:
                return _mk(_mul_down(a, d), _mul_up(b, c))
            if d <= 0.0:
                return _mk(_mul_down(b, d), _mul_up(a, c))
            return _mk(_mul_down(a, d), _mul_up(a, c))
        if c >= 0.0:
            return _mk(_mul_down(a, d), _mul_up(b, d))
        if d <= 0.0:
            return _mk(_mul_down(b, c), _mul_up(a, c))
        return _mk(
            min(_mul_down(a, d), _mul_down(b, c)),
            max(_mul_up(a, c), _mul_up(b, d)),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Interval):
            other = Interval(float(other))
        c, d = other.lo, other.hi
        if c <= 0.0 <= d:
            raise IntervalDomainError(f"division by interval containing zero: {other}")
        a, b = self.lo, self.hi
        if c > 0.0:
            if a >= 0.0:
                return _mk(_div_down(a, d), _div_up(b, c))
            if b <= 0.0:
                return _mk(_div_down(a, c), _div_up(b, d))
            return _mk(_div_down(a, c), _div_up(b, c))
        # d < 0
        if a >= 0.0:
            return _mk(_div_down(b, d), _div_up(a, c))
        if b <= 0.0:
            return _mk(_div_down(b, c), _div_up(a, d))
        return _mk(_div_down(b, d), _div_up(a, d))

    def __rtruediv__(self, other):
        return Interval(float(other)).__truediv__(self)


def _mk(lo, hi):
    """Fast constructor for endpoints already known to be ordered."""
    if not (-_MAX <= lo <= hi <= _MAX):
        raise IntervalDomainError(f"invalid interval endpoints [{lo!r}, {hi!r}]")
    iv = Interval.__new__(Interval)
    iv.lo = lo
    iv.hi = hi
    return iv


# ---------------------------------------------------------------------------
# set operations
# ---------------------------------------------------------------------------


def hull(a, b):
    return _mk(min(a.lo, b.lo), max(a.hi, b.hi))


def overlaps(a, b):
    return a.lo <= b.hi and b.lo <= a.hi


def intersect(a, b, context=""):
    """Intersection of two enclosures of the same quantity.

    An empty intersection means the two enclosures cannot both be correct,
    so it raises :class:`EmptyIntersectionError` instead of clamping.
    """
    lo = max(a.lo, b.lo)
    hi = min(a.hi, b.hi)
    if lo > hi:
        raise EmptyIntersectionError(a, b, context)
    return _mk(lo, hi)


def subdivide(a, n):
    """Split into n consecutive intervals sharing endpoints, union == a."""
    if n < 1:
        raise ValueError("need at least one piece")
    lo, hi = a.lo, a.hi
    span = hi - lo
    points = [lo] + [lo + span * (i / n) for i in range(1, n)] + [hi]
    for p, q in zip(points, points[1:]):
        if p > q:
            raise SoundnessError("subdivision points not monotone")
    return [_mk(p, q) for p, q in zip(points, points[1:])]


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------

# math.pi and 0.6931471805599453 are the nearest doubles to the true
# constants, so one ulp on each side is a rigorous enclosure.  The test
# suite re-verifies both against a 200-bit oracle.
PI = _mk(_nextafter(math.pi, -_INF), _nextafter(math.pi, _INF))
LN2 = _mk(_nextafter(0.6931471805599453, -_INF), _nextafter(0.6931471805599453, _INF))

_LOG2E = 1.4426950408889634


# ---------------------------------------------------------------------------
# elementary functions
# ---------------------------------------------------------------------------

_EXP_COEFFS = tuple(Interval.from_fraction(Fraction(1, math.factorial(i))) for i in range(23))
_EXP_TAIL_FACTOR = 1.5  # > e**0.35 where 0.35 bounds |r| after reduction
_EXP_TAIL_DEN = _float_down(math.factorial(23))
_EXP_ARG_LIMIT = 700.0  # keeps 2**k scaling within the normal double range

_SIN_COEFFS = tuple(
    Interval.from_fraction(Fraction((-1) ** k, math.factorial(2 * k + 1))) for k in range(11)
)
_SIN_TAIL_DEN = _float_down(math.factorial(23))

_COS_COEFFS = tuple(
    Interval.from_fraction(Fraction((-1) ** k, math.factorial(2 * k))) for k in range(11)
)
_COS_TAIL_DEN = _float_down(math.factorial(22))

_ATANH_COEFFS = tuple(Interval.from_fraction(Fraction(1, 2 * i + 1)) for i in range(13))
_ATANH_TAIL_DEN = _mul_down(27.0, 0.97)  # 27 * (1 - u**2) lower bound, |u| <= 0.1716

_SIN_ARG_LIMIT = 1.5707963267948966  # largest double not exceeding pi/2


def _horner(coeffs, x):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def _pow_mag_up(m, k):
    """Upper bound of m**k for m >= 0 (remainder magnitudes only)."""
    acc = 1.0
    for _ in range(k):
        acc = _mul_up(acc, m)
    return acc


def _exp_point(x):
    """Rigorous enclosure of e**x for a double x, |x| <= 700."""
    if abs(x) > _EXP_ARG_LIMIT:
        raise IntervalDomainError(f"exp argument {x} outside supported range")
    k = round(x * _LOG2E)
    r = Interval(x) - Interval.from_int(k) * LN2  # |r| <= 0.347 + slack
    s = _horner(_EXP_COEFFS, r)
    tail = _mul_up(_EXP_TAIL_FACTOR, _div_up(_pow_mag_up(r.mag, 23), _EXP_TAIL_DEN))
    lo = _sum_down(s.lo, -tail)
    hi = _sum_up(s.hi, tail)
    # scaling by 2**k is exact: the argument guard keeps results normal
    return math.ldexp(max(0.0, lo), k), math.ldexp(hi, k)


def exp(a):
    lo, _ = _exp_point(a.lo)
    if a.hi == a.lo:
        return _mk(lo, _exp_point(a.lo)[1])
    return _mk(lo, _exp_point(a.hi)[1])


def _ln_point(x):
    """Rigorous enclosure (lo, hi) of ln(x) for a double x > 0."""
    m, e = math.frexp(x)  # x = m * 2**e, m in [0.5, 1)
    if m < 0.7071067811865476:
        m *= 2.0  # exact
        e -= 1
    mi = Interval(m)
    u = (mi - 1.0) / (mi + 1.0)  # |u| <= 0.1716, so u**2 <= 0.03
    s = _horner(_ATANH_COEFFS, u * u) * u * 2.0  # 2*atanh(u) = ln(m)
    tail = _mul_up(2.0, _div_up(_pow_mag_up(u.mag, 27), _ATANH_TAIL_DEN))
    res = _mk(_sum_down(s.lo, -tail), _sum_up(s.hi, tail)) + Interval.from_int(e) * LN2
    return res.lo, res.hi


def ln(a):
    if a.lo <= 0.0:
        raise IntervalDomainError(f"ln requires a strictly positive interval, got {a}")
    lo, hi = _ln_point(a.lo)
    if a.hi != a.lo:
        hi = _ln_point(a.hi)[1]
    return _mk(lo, hi)


def sqrt(a):
    if a.lo < 0.0:
        raise IntervalDomainError(f"sqrt requires a nonnegative interval, got {a}")
    return _mk(_sqrt_down(a.lo), _sqrt_up(a.hi))


def _sin_point(x):
    xi = Interval(x)
    s = _horner(_SIN_COEFFS, xi * xi) * xi
    tail = _div_up(_pow_mag_up(abs(x), 23), _SIN_TAIL_DEN)
    return _sum_down(s.lo, -tail), _sum_up(s.hi, tail)


def sin(a):
    """sin on [-pi/2, pi/2] only (monotone there); wider arguments error."""
    if a.lo < -_SIN_ARG_LIMIT or a.hi > _SIN_ARG_LIMIT:
        raise IntervalDomainError(f"sin argument {a} outside [-pi/2, pi/2]")
    lo = _sin_point(a.lo)[0]
    hi = _sin_point(a.hi)[1] if a.hi != a.lo else _sin_point(a.lo)[1]
    return _mk(max(-1.0, lo), min(1.0, hi))


def _cos_point(x):
    s = _horner(_COS_COEFFS, Interval(x) * Interval(x))
    tail = _div_up(_pow_mag_up(abs(x), 22), _COS_TAIL_DEN)
    return _sum_down(s.lo, -tail), _sum_up(s.hi, tail)


def cos(a):
    """cos on [-pi/2, pi/2] only; even, decreasing on [0, pi/2]."""
    if a.lo < -_SIN_ARG_LIMIT or a.hi > _SIN_ARG_LIMIT:
        raise IntervalDomainError(f"cos argument {a} outside [-pi/2, pi/2]")
    if a.lo >= 0.0:
        return _mk(max(-1.0, _cos_point(a.hi)[0]), min(1.0, _cos_point(a.lo)[1]))
    if a.hi <= 0.0:
        return _mk(max(-1.0, _cos_point(a.lo)[0]), min(1.0, _cos_point(a.hi)[1]))
    lo = min(_cos_point(a.lo)[0], _cos_point(a.hi)[0])
    return _mk(max(-1.0, lo), 1.0)  # cos(0) = 1 attained inside


def _pow_point(x, k):
    """Enclosure of x**k for a double x and k >= 1, by binary powering."""
    acc = _mk(1.0, 1.0)
    base = Interval(x)
    while k:
        if k & 1:
            acc = acc * base
        k >>= 1
        if k:
            base = base * base
    return acc


def pow_int(a, k):
    """a**k with containment; k may be negative if 0 is not in a."""
    if k == 0:
        return _mk(1.0, 1.0)
    if k < 0:
        return pow_int(1.0 / a, -k)
    if k == 1:
        return a
    if k & 1 or a.lo >= 0.0:
        # odd exponent, or nonnegative base: monotone increasing
        return _mk(_pow_point(a.lo, k).lo, _pow_point(a.hi, k).hi)
    # even exponent from here on
    if a.hi <= 0.0:
        return _mk(_pow_point(a.hi, k).lo, _pow_point(a.lo, k).hi)
    return _mk(0.0, _pow_point(max(-a.lo, a.hi), k).hi)


# ---------------------------------------------------------------------------
# decimal rendering
# ---------------------------------------------------------------------------


def format_outward(a, digits):
    """Render endpoints as decimal strings rounded away from the interval."""
    if digits < 1:
        raise ValueError("need at least one digit")
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_FLOOR
        lo = ctx.plus(Decimal(a.lo))
        ctx.rounding = ROUND_CEILING
        hi = ctx.plus(Decimal(a.hi))
    return str(lo), str(hi)
