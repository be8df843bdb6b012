"""Finite enumerations with the exact Hausdorff metric.

A finite enumeration is a non-empty list of points; order and duplicates
carry no meaning.  Because the underlying metrics are decidable, the
Hausdorff distance is computed exactly as a max-min over the two lists.
Returning the distance itself subsumes both the classical-existential
hemimetric and its ``forall delta`` variant.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Generic, Iterable, Iterator, TypeVar

from .metric_core import (
    RAT_METRIC,
    DecidableMetric,
    LocateResult,
    Point2,
    check_gap,
    format_rat,
    parse_rat,
    pos,
)

X = TypeVar("X")
Y = TypeVar("Y")

Locator = Callable[[X, X, Fraction, Fraction], LocateResult]


@dataclass(frozen=True)
class FiniteEnum(Generic[X]):
    points: tuple

    def __init__(self, points: Iterable[X]):
        pts = tuple(points)
        if not pts:
            raise ValueError("a finite enumeration must have at least one point")
        object.__setattr__(self, "points", pts)

    def __iter__(self) -> Iterator[X]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return f"FiniteEnum({list(self.points)!r})"


def _hemi_dist_line(a: FiniteEnum[Fraction], b: FiniteEnum[Fraction]) -> Fraction:
    # on Q the nearest point of b is a neighbour in sorted order
    bs = sorted(set(b.points))
    worst = Fraction(0)
    for x in a.points:
        i = bisect.bisect_left(bs, x)
        best = min(abs(x - bs[j]) for j in (i - 1, i) if 0 <= j < len(bs))
        if best > worst:
            worst = best
    return worst


def hemi_dist(m: DecidableMetric[X], a: FiniteEnum[X], b: FiniteEnum[X]) -> Fraction:
    """Largest distance from a point of ``a`` to its nearest point of ``b``."""
    if m is RAT_METRIC:
        return _hemi_dist_line(a, b)
    dist = m.dist
    worst = Fraction(0)
    bpts = b.points
    for x in a.points:
        best = None
        for y in bpts:
            d = dist(x, y)
            if best is None or d < best:
                best = d
                # cannot raise the running max any more
                if best <= worst:
                    break
        if best > worst:
            worst = best
    return worst


def hausdorff_dist(m: DecidableMetric[X], a: FiniteEnum[X], b: FiniteEnum[X]) -> Fraction:
    return max(hemi_dist(m, a, b), hemi_dist(m, b, a))


def hausdorff_metric(m: DecidableMetric[X]) -> DecidableMetric[FiniteEnum[X]]:
    """The Hausdorff metric on finite enumerations over ``m``."""
    return DecidableMetric(lambda a, b: hausdorff_dist(m, a, b), f"F({m.name})")


def fe_ball(m: DecidableMetric[X], eps, a: FiniteEnum[X], b: FiniteEnum[X]) -> bool:
    return hausdorff_dist(m, a, b) <= pos(eps)


def fe_equiv(m: DecidableMetric[X], a: FiniteEnum[X], b: FiniteEnum[X]) -> bool:
    """Same members: each point of one list is at distance 0 from the other list."""
    return hausdorff_dist(m, a, b) == 0


def fe_unit(x: X) -> FiniteEnum[X]:
    return FiniteEnum((x,))


def fe_bind(f: Callable[[X], FiniteEnum[Y]], l: FiniteEnum[X]) -> FiniteEnum[Y]:
    """Apply ``f`` to every member and take the union of the results."""
    return FiniteEnum(y for x in l.points for y in f(x).points)


def fe_map(f: Callable[[X], Y], l: FiniteEnum[X]) -> FiniteEnum[Y]:
    return FiniteEnum(f(x) for x in l.points)


def _hemi_locate(a, b, eps, delta, locator: Locator) -> LocateResult:
    for x in a.points:
        if not any(locator(x, y, eps, delta) is LocateResult.WITHIN for y in b.points):
            # every y was reported further than eps from x
            return LocateResult.BEYOND
    return LocateResult.WITHIN


def fe_locate(a: FiniteEnum[X], b: FiniteEnum[X], eps, delta, locator: Locator) -> LocateResult:
    """Located Hausdorff decision using only a locator on the points.

    For each point the other list is searched for a witness with the point
    locator at ``(eps, delta)``.  If the Hausdorff distance is at most
    ``eps`` a witness always exists, so a failed search proves ``BEYOND``.
    """
    eps, delta = check_gap(eps, delta)
    if _hemi_locate(a, b, eps, delta, locator) is LocateResult.BEYOND:
        return LocateResult.BEYOND
    return _hemi_locate(b, a, eps, delta, locator)


def format_points(l: FiniteEnum) -> str:
    """One point per line, coordinates as canonical rationals."""
    lines = []
    for p in l.points:
        if isinstance(p, tuple):
            lines.append(" ".join(format_rat(c) for c in p))
        else:
            lines.append(format_rat(p))
    return "\n".join(lines) + "\n"


def parse_points(text: str) -> FiniteEnum:
    """Inverse of :func:`format_points`.

    Blank lines, ``#`` comments, braces and commas are ignored.  A line with
    two rationals is a :class:`Point2`, with one a bare rational.
    """
    pts = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0]
        line = line.replace("{", " ").replace("}", " ").replace(",", " ").strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) == 1:
            pts.append(parse_rat(fields[0]))
        elif len(fields) == 2:
            pts.append(Point2(parse_rat(fields[0]), parse_rat(fields[1])))
        else:
            raise ValueError(f"expected one or two rationals per line, got {raw!r}")
    return FiniteEnum(pts)
