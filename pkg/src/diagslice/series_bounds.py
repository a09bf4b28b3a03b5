"""Enclosures of Taylor coefficients of sin(t)/t, F, and log(1+t)/t.

The three building blocks of the change-of-variables map are handled
through globally convergent series centered at 0, split into a finite part
S evaluated in interval arithmetic plus an explicit remainder enclosure E:

* f(t) = sin t / t           (value 1 at t = 0)
* F(t) = (sin t / t - 1)/t^2 (so that 1 + t^2 F(t) = f(t))
* g(t) = log(1 + t)/t        (value 1 at t = 0), for |t| < 1

For f and F, the m-th coefficient is a sum over k >= ceil(m/2) (terms with
negative powers are absent) and the remainder tail is bounded by the
exponential-series Lagrange remainder, giving
|E| <= (1/m!) e^t t^(2N+2-m) / (2N+2-m)!  for t >= 0.

For g the remainder uses the derivative-of-geometric-series bound, with a
(2e/m)^m binomial estimate for m > 0; the bound is only useful (decaying
in N) for |t| < 1/2, comfortably true for the argument range
sin(t)/t - 1 in roughly [-0.19, 0] that this project feeds it.

All rational term coefficients are exact big-integer fractions converted
outward to intervals once and cached; factorials like (2N+3)! never pass
through floating point.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import interval as iv
from .interval import Interval

__all__ = [
    "TruncationParams",
    "sinc_coeff",
    "F_coeff",
    "log1p_over_t_coeff",
    "sinc_coeff_list",
    "F_coeff_list",
    "g_coeff_list",
    "remainder_widths",
    "write_remainder_widths_csv",
]

# f and F enclosures are only ever needed on [0, 1.1]; a hair of slack
# admits the right endpoint after subdivision rounding.
_T_SUP = 1.1000000000000005


@dataclass(frozen=True)
class TruncationParams:
    """Truncation index N and coefficient order m."""

    N: int = 20
    m: int = 0

    def __post_init__(self):
        if self.N < 0 or self.m < 0:
            raise ValueError("N and m must be nonnegative")


@lru_cache(maxsize=None)
def _f_term(m, k):
    # (1/m!) (-1)^k / ((2k-m)! (2k+1))
    return Interval.from_fraction(
        Fraction((-1) ** k, math.factorial(m) * math.factorial(2 * k - m) * (2 * k + 1))
    )


@lru_cache(maxsize=None)
def _F_term(m, k):
    return Interval.from_fraction(
        Fraction(
            (-1) ** (k + 1),
            math.factorial(m)
            * math.factorial(2 * k - m)
            * ((2 * k + 1) * (2 * k + 2) * (2 * k + 3)),
        )
    )


@lru_cache(maxsize=None)
def _g_term(m, k):
    return Interval.from_fraction(
        Fraction((-1) ** (m + k) * math.comb(k + m, m), k + m + 1)
    )


@lru_cache(maxsize=None)
def _inv_fact2(m, j):
    return Interval.from_fraction(Fraction(1, math.factorial(m) * math.factorial(j)))


def _powers(t, top):
    out = [Interval(1.0), t]
    for _ in range(top - 1):
        out.append(out[-1] * t)
    return out[: top + 1] if top >= 1 else out[:1]


def _check_ft_domain(t, p, for_g=False):
    if for_g:
        if t.abs().hi >= 1.0:
            raise iv.IntervalDomainError(f"log(1+t)/t series needs |t| < 1, got {t}")
        if p.N < p.m:
            raise ValueError(f"need N >= m for log(1+t)/t, got N={p.N}, m={p.m}")
    else:
        if t.lo < 0.0 or t.hi > _T_SUP:
            raise iv.IntervalDomainError(f"sinc-family argument outside [0, 1.1]: {t}")
        if 2 * p.N < p.m:
            raise ValueError(f"need N >= m/2, got N={p.N}, m={p.m}")


def _exp_tail_mag(t, p):
    """Upper bound of (1/m!) e^t t^(2N+2-m) / (2N+2-m)! on the interval."""
    j = 2 * p.N + 2 - p.m
    th = Interval(t.hi)
    bound = iv.exp(th) * iv.pow_int(th, j) * _inv_fact2(p.m, j)
    return bound.hi


def _sum_f_like(term_fn, t, p, powers=None):
    if powers is None:
        powers = _powers(t, 2 * p.N - p.m)
    k0 = (p.m + 1) // 2
    acc = None
    for k in range(k0, p.N + 1):
        term = term_fn(p.m, k) * powers[2 * k - p.m]
        acc = term if acc is None else acc + term
    if acc is None:
        acc = Interval(0.0)
    mag = _exp_tail_mag(t, p)
    return iv.Interval(acc.lo - 0.0, acc.hi) + iv.Interval(-mag, mag)


def sinc_coeff(t, p):
    """Enclosure of the m-th Taylor coefficient of sin(t)/t at every point of t."""
    _check_ft_domain(t, p)
    return _sum_f_like(_f_term, t, p)


def F_coeff(t, p):
    """Enclosure of the m-th Taylor coefficient of (sin(t)/t - 1)/t^2."""
    _check_ft_domain(t, p)
    return _sum_f_like(_F_term, t, p)


def _g_tail_mag(t, p):
    tabs = t.abs()
    N, m = p.N, p.m
    th = Interval(tabs.hi)
    num = iv.pow_int(th, N + 1)
    if m == 0:
        den = iv.pow_int(1.0 - th, N + 2)
        return (num / den).hi
    two_e = iv.exp(Interval(1.0)) * 2.0
    factor = iv.pow_int(two_e / m, m) * Interval.from_int(
        math.factorial(m) * math.comb(m + N + 1, m)
    )
    den = iv.pow_int(1.0 - th, m + N + 2)
    return (factor * num / den).hi


def log1p_over_t_coeff(t, p):
    """Enclosure of the m-th Taylor coefficient of log(1+t)/t, |t| < 1."""
    _check_ft_domain(t, p, for_g=True)
    powers = _powers(t, p.N)
    acc = None
    for k in range(p.N + 1):
        term = _g_term(p.m, k) * powers[k]
        acc = term if acc is None else acc + term
    mag = _g_tail_mag(t, p)
    return acc + Interval(-mag, mag)


# ---------------------------------------------------------------------------
# batched variants sharing one power table (hot path of the sweep)
# ---------------------------------------------------------------------------


def sinc_coeff_list(t, N, K):
    _check_ft_domain(t, TruncationParams(N, K))
    powers = _powers(t, 2 * N)
    return [
        _sum_f_like(_f_term, t, TruncationParams(N, m), powers) for m in range(K + 1)
    ]


def F_coeff_list(t, N, K):
    _check_ft_domain(t, TruncationParams(N, K))
    powers = _powers(t, 2 * N)
    return [
        _sum_f_like(_F_term, t, TruncationParams(N, m), powers) for m in range(K + 1)
    ]


def g_coeff_list(t, N, K):
    return [log1p_over_t_coeff(t, TruncationParams(N, m)) for m in range(K + 1)]


# ---------------------------------------------------------------------------
# remainder-width diagnostics
# ---------------------------------------------------------------------------


def remainder_widths(p, t_max):
    """Upper-bound magnitudes (E_f, E_g) at t_max, for plotting."""
    t = Interval(abs(t_max))
    ef = _exp_tail_mag(t, p)
    eg = _g_tail_mag(t, p) if t.hi < 1.0 else math.inf
    return ef, eg


def write_remainder_widths_csv(path, n_values=(10, 20, 25), m_values=(0, 1, 3, 5, 7), t_points=23, t_max=1.1, g_t_max=0.19):
    """Remainder-bound curves over a t grid, one row per (kind, N, m, t)."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["function", "N", "m", "t", "bound"])
        for N in n_values:
            for m in m_values:
                if 2 * N < m:
                    continue
                p = TruncationParams(N, m)
                for i in range(t_points):
                    t = t_max * i / (t_points - 1)
                    w.writerow(["f", N, m, repr(t), repr(remainder_widths(p, t)[0])])
                if N < m:
                    continue
                for i in range(t_points):
                    t = g_t_max * i / (t_points - 1)
                    w.writerow(["g", N, m, repr(t), repr(remainder_widths(p, t)[1])])
