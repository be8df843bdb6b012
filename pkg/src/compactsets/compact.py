"""Compact sets as the completion of finite enumerations.

A compact set is a :class:`RegularFn` whose approximations are finite
enumerations, regular in the Hausdorff metric.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import TypeVar

from .completion import RegularFn, UniformFn, bind, couple, unit
from .finite_enum import FiniteEnum, fe_map, hausdorff_metric
from .metric_core import (
    POINT_METRIC,
    RAT_METRIC,
    DecidableMetric,
    LocateResult,
    check_gap,
    format_rat,
    pos,
    rat,
)

X = TypeVar("X")
Y = TypeVar("Y")

Compact = RegularFn  # RegularFn[FiniteEnum[X]] under the Hausdorff metric


def base_metric(s: Compact) -> DecidableMetric:
    """Metric on the points of a compact set."""
    return s.metric.components[0]


def compact_metric(m: DecidableMetric) -> DecidableMetric:
    # Hausdorff metric tagged with its point metric so callers can recover it
    h = hausdorff_metric(m)
    return DecidableMetric(h.dist, h.name, (m,))


def from_enum(l: FiniteEnum[X], metric: DecidableMetric[X] = RAT_METRIC) -> Compact:
    """A finite enumeration viewed as a (constant) compact set."""
    return unit(l, compact_metric(metric))


def interval_compact(a, b) -> Compact:
    """The interval ``[a, b]`` approximated by uniform grids.

    ``approx(eps)`` has ``n = max(1, ceil((b - a) / (2 eps)))`` equal steps,
    so every point of the interval is within half a step (``<= eps``) of
    the grid.
    """
    a, b = rat(a), rat(b)
    if a > b:
        raise ValueError(f"empty interval [{format_rat(a)}, {format_rat(b)}]")
    width = b - a

    def approx(eps: Fraction) -> FiniteEnum[Fraction]:
        if width == 0:
            return FiniteEnum((a,))
        n = max(1, math.ceil(width / (2 * eps)))
        step = width / n
        return FiniteEnum(a + k * step for k in range(n + 1))

    return RegularFn(approx, compact_metric(RAT_METRIC))


def dist_fc(l: FiniteEnum[RegularFn[X]]) -> Compact:
    """Read a finite enumeration of completion points as a compact set."""
    points = l.points
    metric = points[0].metric
    return RegularFn(
        lambda eps: FiniteEnum(x.approx(eps) for x in points),
        compact_metric(metric),
    )


def compact_image(f: UniformFn[X, RegularFn[Y]], s: Compact) -> Compact:
    """Image of a compact set under ``f: X -> C(Y)``.

    ``bind`` of ``l -> dist_fc(map f l)``; applying ``f`` pointwise to an
    enumeration keeps ``f``'s modulus in the Hausdorff metric.
    """
    fn = f.fn
    image = UniformFn(
        lambda l: dist_fc(fe_map(fn, l)),
        f.modulus,
        compact_metric(f.metric),
    )
    return bind(image, s)


def graph(f: UniformFn[Fraction, RegularFn], domain: Compact) -> Compact:
    """Graph ``{(x, f(x)) | x in domain}`` as a compact subset of the plane."""
    fn, mu = f.fn, f.modulus
    g = UniformFn(
        lambda x: couple(unit(x, RAT_METRIC), fn(x)),
        lambda eps: min(eps, mu(eps)),
        POINT_METRIC,
    )
    return compact_image(g, domain)


def member_locate(x: RegularFn[X], s: Compact, eps, delta) -> LocateResult:
    """Located membership: ``WITHIN`` means ``x`` is within ``delta`` of ``s``,
    ``BEYOND`` that it is further than ``eps`` from ``s``."""
    eps, delta = check_gap(eps, delta)
    theta = (delta - eps) / 4
    p = x.approx(theta)
    dist = base_metric(s).dist
    m = min(dist(p, y) for y in s.approx(theta).points)
    return LocateResult.WITHIN if m <= eps + 2 * theta else LocateResult.BEYOND


def epsilon_net(s: Compact, eps) -> FiniteEnum:
    """A finite enumeration within ``eps`` of every point of ``s``.

    The points are approximants, not necessarily members of the set itself.
    """
    return s.approx(pos(eps) / 2)
