"""Certified real operations used by the plotting pipeline."""

from __future__ import annotations

from fractions import Fraction

from .completion import RegularFn, UniformFn, bind, identity_modulus, unit
from .metric_core import RAT_METRIC, format_rat, pos, rat


class DomainError(ValueError):
    """An argument lies outside the domain where a certified bound holds."""


EXP_MAX_ARG = Fraction(1)


def exp_terms(q: Fraction, eps: Fraction) -> int:
    """Smallest ``n`` whose geometric tail bound is at most ``eps``.

    Bounds ``sum_{k>n} |q|^k/k!`` by ``|q|^(n+1)/(n+1)! / (1 - |q|/(n+2))``,
    valid once ``n + 2 > |q|``.
    """
    a = abs(q)
    n = 0
    term = a  # |q|^(n+1)/(n+1)!
    while True:
        if n + 2 > a and term / (1 - a / (n + 2)) <= eps:
            return n
        n += 1
        term = term * a / (n + 1)


def _round_dyadic(value: Fraction, eps: Fraction) -> Fraction:
    # nearest multiple of 2**-k with 2**-k <= eps; moves value by at most eps/2
    k = 0
    while Fraction(1, 1 << k) > eps:
        k += 1
    scale = 1 << k
    return Fraction(round(value * scale), scale)


def exp_rat(q, eps) -> Fraction:
    """``exp(q)`` to within ``eps`` for rational ``q <= 1``.

    Taylor partial sum to ``eps/2`` in exact arithmetic, then rounded onto a
    dyadic grid of mesh ``<= eps/2`` to keep denominators small.
    """
    q, eps = rat(q), pos(eps)
    if q > EXP_MAX_ARG:
        raise DomainError(f"exp is only certified on (-inf, 1], got {format_rat(q)}")
    if q == 0:
        return Fraction(1)
    half = eps / 2
    n = exp_terms(q, half)
    total = Fraction(0)
    term = Fraction(1)
    for k in range(n + 1):
        total += term
        term = term * q / (k + 1)
    return _round_dyadic(total, half)


def exp_modulus(eps: Fraction) -> Fraction:
    # |exp'| <= e < 3 on (-inf, 1]
    return eps / 3


EXP_FN: UniformFn = UniformFn(
    lambda q: RegularFn(lambda eps: exp_rat(q, eps), RAT_METRIC),
    exp_modulus,
    RAT_METRIC,
)


def exp_real(x: RegularFn) -> RegularFn:
    """Exponential of a real whose approximations stay ``<= 1``."""
    return bind(EXP_FN, x)


def clamp_fn(lo, hi) -> UniformFn:
    lo, hi = rat(lo), rat(hi)
    if not lo < hi:
        raise ValueError(f"clamp needs lo < hi, got [{format_rat(lo)}, {format_rat(hi)}]")
    return UniformFn(lambda q: max(lo, min(hi, q)), identity_modulus, RAT_METRIC)


def affine_fn(a, b) -> UniformFn:
    """``q -> a*q + b`` with modulus ``eps / max(|a|, 1)``."""
    a, b = rat(a), rat(b)
    scale = max(abs(a), Fraction(1))
    return UniformFn(lambda q: a * q + b, lambda eps: eps / scale, RAT_METRIC)


def real(q) -> RegularFn:
    """A rational as a real number."""
    return unit(rat(q), RAT_METRIC)
