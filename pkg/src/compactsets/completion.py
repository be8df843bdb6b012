"""The completion monad: regular functions over a metric space.

A point of the completion is a function ``approx`` taking a precision
``eps > 0`` to an approximation, subject to the regularity condition

    dist(approx(e1), approx(e2)) <= e1 + e2.

Real numbers are the completion of Q.  ``unit``, ``map`` and ``bind`` lift
values and uniformly continuous functions into the completion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Generic, Iterable, TypeVar

from .metric_core import (
    RAT_METRIC,
    DecidableMetric,
    LocateResult,
    Point2,
    check_gap,
    pos,
    product_metric,
)

X = TypeVar("X")
Y = TypeVar("Y")

Modulus = Callable[[Fraction], Fraction]


@dataclass(frozen=True)
class RegularFn(Generic[X]):
    """A completion point.  Call it with a precision to get an approximation."""

    approx: Callable[[Fraction], X]
    metric: DecidableMetric[X] = RAT_METRIC

    def __call__(self, eps) -> X:
        return self.approx(pos(eps))


Real = RegularFn  # RegularFn[Fraction] with metric RAT_METRIC


@dataclass(frozen=True)
class UniformFn(Generic[X, Y]):
    """A function with a modulus of uniform continuity.

    ``dist_X(a, b) <= modulus(eps)`` must imply ``dist_Y(fn(a), fn(b)) <= eps``.
    ``metric`` is the metric of the target space ``Y``; for functions into a
    completion ``C(Y)`` it is still the metric of ``Y`` (what ``bind`` needs
    to label its result).  Moduli are expected to be monotone non-decreasing.
    """

    fn: Callable[[X], Y]
    modulus: Modulus
    metric: DecidableMetric = RAT_METRIC

    def __call__(self, x: X) -> Y:
        return self.fn(x)


def identity_modulus(eps: Fraction) -> Fraction:
    return eps


def unit(x: X, metric: DecidableMetric[X] = RAT_METRIC) -> RegularFn[X]:
    """Embed a point as a constant approximation function."""
    return RegularFn(lambda eps: x, metric)


def map_(f: UniformFn[X, Y], x: RegularFn[X]) -> RegularFn[Y]:
    """Lift ``f`` to the completion: ``approx(eps) = f(x(mu_f(eps)))``."""
    fn, mu = f.fn, f.modulus
    return RegularFn(lambda eps: fn(x.approx(mu(eps))), f.metric)


def bind(f: UniformFn[X, RegularFn[Y]], x: RegularFn[X]) -> RegularFn[Y]:
    """Lift ``f: X -> C(Y)`` to ``C(X) -> C(Y)``.

    The precision budget is split evenly between the outer approximation of
    ``x`` and the inner approximation of ``f``'s result.
    """
    fn, mu = f.fn, f.modulus

    def approx(eps: Fraction) -> Y:
        half = eps / 2
        return fn(x.approx(mu(half))).approx(half)

    return RegularFn(approx, f.metric)


def compose(g: UniformFn, f: UniformFn) -> UniformFn:
    """``g . f`` with modulus ``mu_f . mu_g``."""
    gfn, ffn = g.fn, f.fn
    mu_f, mu_g = f.modulus, g.modulus
    return UniformFn(lambda x: gfn(ffn(x)), lambda eps: mu_f(mu_g(eps)), g.metric)


def lift(f: UniformFn[X, RegularFn[Y]]) -> UniformFn[RegularFn[X], RegularFn[Y]]:
    """``bind(f)`` as a uniformly continuous function on the completion.

    It keeps ``f``'s modulus.
    """
    return UniformFn(lambda x: bind(f, x), f.modulus, f.metric)


def unit_fn(metric: DecidableMetric = RAT_METRIC) -> UniformFn:
    """``unit`` itself, an isometry."""
    return UniformFn(lambda x: unit(x, metric), identity_modulus, metric)


def unit_after(f: UniformFn[X, Y]) -> UniformFn[X, RegularFn[Y]]:
    """``unit . f``; ``bind(unit_after(f))`` coincides with ``map(f)``."""
    fn, metric = f.fn, f.metric
    return UniformFn(lambda x: unit(fn(x), metric), f.modulus, metric)


def couple(x: RegularFn[X], y: RegularFn[Y]) -> RegularFn[Point2]:
    """Pair two completion points into a point of the completed product."""
    return RegularFn(
        lambda eps: Point2(x.approx(eps), y.approx(eps)),
        product_metric(x.metric, y.metric),
    )


def _component_metric(z: RegularFn[Point2], index: int) -> DecidableMetric:
    components = z.metric.components
    if not components:
        raise ValueError(f"{z.metric!r} is not a product metric; pass the component metric")
    return components[index]


def proj1_bar(z: RegularFn[Point2], metric: DecidableMetric | None = None) -> RegularFn:
    """First projection lifted with ``map`` (modulus identity)."""
    metric = metric or _component_metric(z, 0)
    return map_(UniformFn(lambda p: p[0], identity_modulus, metric), z)


def proj2_bar(z: RegularFn[Point2], metric: DecidableMetric | None = None) -> RegularFn:
    """Second projection lifted with ``map`` (modulus identity)."""
    metric = metric or _component_metric(z, 1)
    return map_(UniformFn(lambda p: p[1], identity_modulus, metric), z)


def ball_locate_completion(x: RegularFn[X], y: RegularFn[X], eps, delta) -> LocateResult:
    """Located ball decision on the completion.

    With ``theta = (delta - eps)/4`` the two approximations at ``theta`` are
    each within ``theta`` of their limits, so comparing their distance
    against ``eps + 2*theta`` decides ``B_delta`` or not ``B_eps``.
    """
    eps, delta = check_gap(eps, delta)
    theta = (delta - eps) / 4
    q = x.metric.dist(x.approx(theta), y.approx(theta))
    return LocateResult.WITHIN if q <= eps + 2 * theta else LocateResult.BEYOND


def regularity_check(x: RegularFn[Any], samples: Iterable[tuple[Any, Any]]) -> bool:
    """Check ``dist(x(e1), x(e2)) <= e1 + e2`` for every sampled pair."""
    dist = x.metric.dist
    for e1, e2 in samples:
        e1, e2 = pos(e1), pos(e2)
        if dist(x.approx(e1), x.approx(e2)) > e1 + e2:
            return False
    return True
