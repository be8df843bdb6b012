"""Exact rational arithmetic and decidable metrics.

Rationals are :class:`fractions.Fraction`, which is already arbitrary
precision and kept in lowest terms, so structural equality is semantic
equality.  A metric is represented by its exact distance function; the ball
relation ``B_eps(a, b)`` is recovered as ``dist(a, b) <= eps``.

Stability of the ball relation (double negation elimination) carries no
computational content and is therefore not represented here.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Generic, NamedTuple, TypeVar

X = TypeVar("X")

Rat = Fraction
PosRat = Fraction

_RAT_RE = re.compile(r"^\s*([+\-−]?)(\d+)(?:/(\d+))?\s*$")


def rat(value: Any) -> Fraction:
    """Coerce ``value`` into an exact rational.

    Floats are rejected: they would silently smuggle rounding into the
    certified path.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing to build a rational from {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def pos(value: Any) -> Fraction:
    """Coerce ``value`` into a strictly positive rational (a precision request)."""
    q = rat(value)
    if q <= 0:
        raise ValueError(f"expected a positive rational, got {format_rat(q)}")
    return q


def parse_rat(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` with an optional sign (ASCII or unicode minus)."""
    m = _RAT_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    sign, num, den = m.groups()
    den = int(den) if den is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in rational: {text!r}")
    q = Fraction(int(num), den)
    return -q if sign in ("-", "−") else q


def format_rat(q: Fraction) -> str:
    """Canonical text form: ``"-6"``, ``"1/8"``."""
    return str(Fraction(q))


def rat_dist(a: Fraction, b: Fraction) -> Fraction:
    return abs(a - b)


def rat_ball(eps: Fraction, a: Fraction, b: Fraction) -> bool:
    """The usual ball relation on Q: ``|a - b| <= eps``."""
    return abs(a - b) <= eps


class Point2(NamedTuple):
    """A pair; with rational coordinates this is a point of Q x Q."""

    x: Any
    y: Any

    def __str__(self) -> str:
        return f"{format_rat(self.x)} {format_rat(self.y)}"


def sup_dist(p: Point2, q: Point2) -> Fraction:
    """Sup metric on Q x Q."""
    return max(abs(p[0] - q[0]), abs(p[1] - q[1]))


@dataclass(frozen=True)
class DecidableMetric(Generic[X]):
    """A metric given by an exact rational distance function."""

    dist: Callable[[X, X], Fraction]
    name: str = "metric"
    components: tuple = ()

    def ball(self, eps: Fraction, a: X, b: X) -> bool:
        return self.dist(a, b) <= eps

    def __repr__(self) -> str:
        return f"DecidableMetric({self.name})"


def product_metric(mx: DecidableMetric, my: DecidableMetric) -> DecidableMetric:
    """Sup metric on pairs: the product ball holds iff both component balls hold."""
    if mx is RAT_METRIC and my is RAT_METRIC:
        return POINT_METRIC

    def dist(p, q):
        return max(mx.dist(p[0], q[0]), my.dist(p[1], q[1]))

    return DecidableMetric(dist, f"({mx.name} x {my.name})", (mx, my))


RAT_METRIC: DecidableMetric[Fraction] = DecidableMetric(rat_dist, "Q")
POINT_METRIC: DecidableMetric[Point2] = DecidableMetric(
    sup_dist, "Q x Q", (RAT_METRIC, RAT_METRIC)
)


class LocateResult(enum.Enum):
    """Answer of a located-metric query with ``eps < delta``.

    ``WITHIN`` guarantees the points are within ``delta``; ``BEYOND``
    guarantees they are further apart than ``eps``.
    """

    WITHIN = "within"
    BEYOND = "beyond"


def check_gap(eps: Fraction, delta: Fraction) -> tuple[Fraction, Fraction]:
    eps, delta = pos(eps), pos(delta)
    if not eps < delta:
        raise ValueError(
            f"locate needs eps < delta, got eps={format_rat(eps)} delta={format_rat(delta)}"
        )
    return eps, delta


def locate(m: DecidableMetric[X], a: X, b: X, eps, delta) -> LocateResult:
    """Located decision for a decidable metric.

    Compares the exact distance against ``delta``, so ``WITHIN`` is returned
    whenever the ``delta``-ball holds.
    """
    eps, delta = check_gap(eps, delta)
    return LocateResult.WITHIN if m.dist(a, b) <= delta else LocateResult.BEYOND
