"""Arithmetic of truncated Taylor series with interval coefficients.

A series object ``s`` with center ``T`` (an interval) and coefficients
``c[0..K]`` makes the pointwise claim: for every point t0 in T, ``c[k]``
contains the k-th Taylor coefficient f(k)(t0)/k! of the represented
function about t0.  All operations preserve that claim for every point of
the (possibly intersected) center, so a "thick" center yields enclosures
valid simultaneously for a whole subinterval of expansion points.

Coefficient recurrences for +, *, /, sqrt, composition and inversion only
consume coefficients of index <= k to produce coefficient k, so truncation
at order K loses nothing: the stored coefficients are exact-coefficient
enclosures, not a Taylor model with remainder.

Composition uses the higher-order chain rule summed over the integer
partitions of k (encoded as multiplicity vectors b with sum i*b_i = k and
m = sum b_i), and inversion reuses the same partition sum applied to
t(x(t)) = t, solved for the top coefficient.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from . import interval as iv
from .interval import Interval

__all__ = [
    "IntervalTaylorSeries",
    "CenterMismatchError",
    "partitions",
    "identity_series",
    "constant_series",
    "series_from_fractions",
    "series_add",
    "series_sub",
    "series_scale",
    "series_mul",
    "series_div",
    "series_sqrt",
    "series_intersect",
    "compose_faa_di_bruno",
    "invert_series",
    "evaluate",
    "derivative_bound",
    "sin_series",
    "log_series",
]

DEFAULT_ORDER = 7


class CenterMismatchError(ValueError):
    """Series operands expanded about incompatible centers."""


class IntervalTaylorSeries:
    """Truncated Taylor coefficients (intervals) about an interval center."""

    __slots__ = ("center", "coeffs")

    def __init__(self, center, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self.center = center
        self.coeffs = coeffs

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __repr__(self):
        return f"IntervalTaylorSeries(center={self.center!r}, coeffs={list(self.coeffs)!r})"


def _check_orders(s, r):
    if s.order != r.order:
        raise ValueError(f"order mismatch: {s.order} vs {r.order}")


def _merge_centers(s, r):
    return iv.intersect(s.center, r.center, "series centers")


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def identity_series(center, order=DEFAULT_ORDER):
    """The function t -> t about the given center."""
    one = Interval(1.0)
    zero = Interval(0.0)
    return IntervalTaylorSeries(center, (center, one) + (zero,) * (order - 1))


def constant_series(value, center, order=DEFAULT_ORDER):
    zero = Interval(0.0)
    return IntervalTaylorSeries(center, (value,) + (zero,) * order)


def series_from_fractions(center, fracs, order=None):
    """Exact rational coefficients, outward-rounded to intervals."""
    coeffs = [Interval.from_fraction(Fraction(f)) for f in fracs]
    if order is not None:
        zero = Interval(0.0)
        coeffs += [zero] * (order + 1 - len(coeffs))
    return IntervalTaylorSeries(center, coeffs)


# ---------------------------------------------------------------------------
# linear and multiplicative operations
# ---------------------------------------------------------------------------


def series_add(s, r):
    _check_orders(s, r)
    center = _merge_centers(s, r)
    return IntervalTaylorSeries(center, (a + b for a, b in zip(s.coeffs, r.coeffs)))


def series_sub(s, r):
    _check_orders(s, r)
    center = _merge_centers(s, r)
    return IntervalTaylorSeries(center, (a - b for a, b in zip(s.coeffs, r.coeffs)))


def series_scale(s, factor):
    return IntervalTaylorSeries(s.center, (c * factor for c in s.coeffs))


def series_mul(s, r):
    """Cauchy product truncated at the common order."""
    _check_orders(s, r)
    center = _merge_centers(s, r)
    a, b = s.coeffs, r.coeffs
    out = []
    for k in range(len(a)):
        acc = a[0] * b[k]
        for i in range(1, k + 1):
            acc = acc + a[i] * b[k - i]
        out.append(acc)
    return IntervalTaylorSeries(center, out)


def series_div(s, r):
    """s / r; requires the constant coefficient of r to exclude zero."""
    _check_orders(s, r)
    if r.coeffs[0].lo <= 0.0 <= r.coeffs[0].hi:
        raise iv.IntervalDomainError(
            f"series division by a constant coefficient containing zero: {r.coeffs[0]}"
        )
    center = _merge_centers(s, r)
    q0 = r.coeffs[0]
    out = [s.coeffs[0] / q0]
    for k in range(1, len(s.coeffs)):
        acc = s.coeffs[k]
        for j in range(k):
            acc = acc - out[j] * r.coeffs[k - j]
        out.append(acc / q0)
    return IntervalTaylorSeries(center, out)


def series_sqrt(s):
    """Square root of a series whose constant term is strictly positive.

    r0 = sqrt(s0), r_k = (s_k - sum_{j=1..k-1} r_j r_{k-j}) / (2 r0).
    A constant term touching zero means the enclosure upstream is too wide
    (the caller should subdivide), so it is rejected loudly.
    """
    s0 = s.coeffs[0]
    if s0.lo <= 0.0:
        raise iv.IntervalDomainError(
            f"series sqrt needs a constant term bounded away from zero, got {s0}"
        )
    r0 = iv.sqrt(s0)
    out = [r0]
    two_r0 = r0 * 2.0
    for k in range(1, len(s.coeffs)):
        acc = s.coeffs[k]
        for j in range(1, k):
            acc = acc - out[j] * out[k - j]
        out.append(acc / two_r0)
    return IntervalTaylorSeries(s.center, out)


def series_intersect(s, r, context=""):
    """Coefficientwise intersection of two enclosures of the same function."""
    _check_orders(s, r)
    center = _merge_centers(s, r)
    out = [
        iv.intersect(a, b, f"{context} coefficient {k}")
        for k, (a, b) in enumerate(zip(s.coeffs, r.coeffs))
    ]
    return IntervalTaylorSeries(center, out)


# ---------------------------------------------------------------------------
# partitions and composition
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def partitions(k):
    """All multiplicity vectors b (length k) with sum i*b_i = k.

    Returns tuples (b, m, multinomial) with m = sum(b) and the exact
    integer multinomial m!/(b_1! ... b_k!).  Table-driven users only ever
    need k <= 7, for which the counts are 1, 2, 3, 5, 7, 11, 15.
    """
    result = []

    def rec(remaining, max_part, parts):
        if remaining == 0:
            b = [0] * k
            for p in parts:
                b[p - 1] += 1
            m = len(parts)
            denom = 1
            for c in b:
                if c > 1:
                    denom *= math.factorial(c)
            result.append((tuple(b), m, math.factorial(m) // denom))
            return
        for p in range(min(remaining, max_part), 0, -1):
            rec(remaining - p, p, parts + [p])

    rec(k, k, [])
    return tuple(result)


def compose_faa_di_bruno(g, f):
    """Coefficients of g(f(.)) about f's center.

    Requires f.coeffs[0] (the enclosure of the inner values) to lie inside
    g's center, so that g's coefficient enclosures are valid wherever the
    inner function lands.
    """
    _check_orders(g, f)
    if not g.center.encloses(f.coeffs[0]):
        raise CenterMismatchError(
            f"inner constant term {f.coeffs[0]} not inside outer center {g.center}"
        )
    order = f.order
    out = [g.coeffs[0]]
    for k in range(1, order + 1):
        acc = None
        for b, m, mult in partitions(k):
            term = g.coeffs[m] * mult
            for i, bi in enumerate(b, start=1):
                if bi:
                    term = term * iv.pow_int(f.coeffs[i], bi)
            acc = term if acc is None else acc + term
        out.append(acc)
    return IntervalTaylorSeries(f.center, out)


def invert_series(x, t0):
    """Series of the inverse function about x0 = x.coeffs[0].

    Uses the partition sum for t(x(t)) = t solved for the top coefficient:
    t_1 = 1/x_1 and, for k >= 2,
    t_k = - sum over partitions of k with m != k of
          m!/(b!) * t_m * x_1^(b_1 - k) * prod_{i>=2} x_i^(b_i).
    Requires x_1 to exclude zero.
    """
    x1 = x.coeffs[1]
    if x1.lo <= 0.0 <= x1.hi:
        raise iv.IntervalDomainError(
            f"series inversion needs a first coefficient excluding zero, got {x1}"
        )
    order = x.order
    t_coeffs = [t0, 1.0 / x1]
    for k in range(2, order + 1):
        acc = None
        for b, m, mult in partitions(k):
            if m == k:
                continue
            term = t_coeffs[m] * mult
            term = term * iv.pow_int(x1, b[0] - k)
            for i in range(2, k + 1):
                bi = b[i - 1]
                if bi:
                    term = term * iv.pow_int(x.coeffs[i], bi)
            acc = term if acc is None else acc + term
        t_coeffs.append(-acc if acc is not None else Interval(0.0))
    return IntervalTaylorSeries(x.coeffs[0], t_coeffs)


# ---------------------------------------------------------------------------
# evaluation and derivative extraction
# ---------------------------------------------------------------------------


def evaluate(s, dx):
    """Horner evaluation of the truncated polynomial at center + dx.

    Diagnostic only: without an externally supplied remainder term this
    does not enclose the represented function, just the polynomial.
    """
    acc = s.coeffs[-1]
    for c in reversed(s.coeffs[:-1]):
        acc = acc * dx + c
    return acc


def derivative_bound(s, m):
    """Enclosure of the m-th derivative at the center: m! * coeffs[m]."""
    return s.coeffs[m] * Interval.from_int(math.factorial(m))


# ---------------------------------------------------------------------------
# elementary series kernels (used by the direct evaluation path)
# ---------------------------------------------------------------------------


def sin_series(center, order=DEFAULT_ORDER):
    """Taylor coefficients of sin about a center inside [-pi/2, pi/2]."""
    s = iv.sin(center)
    c = iv.cos(center)
    cycle = (s, c, -s, -c)
    coeffs = [
        cycle[k % 4] * Interval.from_fraction(Fraction(1, math.factorial(k)))
        for k in range(order + 1)
    ]
    return IntervalTaylorSeries(center, coeffs)


def log_series(s):
    """log of a series with strictly positive constant term.

    Composes the log coefficient enclosures about u0 = s.coeffs[0]
    (log_m = (-1)^(m-1) / (m * u0^m)) with s via the chain rule.
    """
    u0 = s.coeffs[0]
    if u0.lo <= 0.0:
        raise iv.IntervalDomainError(f"series log needs a positive constant term, got {u0}")
    order = s.order
    coeffs = [iv.ln(u0)]
    for m in range(1, order + 1):
        sign = Fraction(1, m) if (m - 1) % 2 == 0 else Fraction(-1, m)
        coeffs.append(Interval.from_fraction(sign) * iv.pow_int(u0, -m))
    outer = IntervalTaylorSeries(u0, coeffs)
    return compose_faa_di_bruno(outer, s)
