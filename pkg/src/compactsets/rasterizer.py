"""Rasterize compact subsets of the plane with an exact error certificate.

The window corners are the outer edges of the pixel grid; each set bit is
read back as the point at the centre of its cell.  Snapping a point to its
cell centre moves it by at most half a pixel in the sup metric, so the
raster is within ``eps + half_pixel`` of the ideal set whose
``eps``-approximation was drawn.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .compact import Compact
from .finite_enum import FiniteEnum
from .metric_core import Point2, format_rat, pos, rat


@dataclass(frozen=True)
class Window:
    left: Fraction
    top: Fraction
    right: Fraction
    bottom: Fraction

    def __post_init__(self):
        for name in ("left", "top", "right", "bottom"):
            object.__setattr__(self, name, rat(getattr(self, name)))
        if not self.left < self.right:
            raise ValueError("window needs left < right")
        if not self.bottom < self.top:
            raise ValueError("window needs bottom < top")

    def contains(self, p: Point2) -> bool:
        return self.left <= p[0] <= self.right and self.bottom <= p[1] <= self.top

    def __str__(self) -> str:
        return (
            f"({format_rat(self.left)}, {format_rat(self.top)})-"
            f"({format_rat(self.right)}, {format_rat(self.bottom)})"
        )


@dataclass(frozen=True)
class Raster:
    """Boolean pixel grid, row-major, top row first."""

    width: int
    height: int
    bits: tuple[tuple[bool, ...], ...]
    window: Window

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("raster dimensions must be positive")
        if len(self.bits) != self.height or any(len(row) != self.width for row in self.bits):
            raise ValueError("bit grid does not match raster dimensions")

    def count(self) -> int:
        return sum(sum(row) for row in self.bits)


@dataclass(frozen=True)
class PlotCertificate:
    approx_epsilon: Fraction
    snap_bound: Fraction
    total_bound: Fraction

    def __post_init__(self):
        if self.total_bound != self.approx_epsilon + self.snap_bound:
            raise ValueError("total_bound must equal approx_epsilon + snap_bound")

    def __str__(self) -> str:
        return (
            f"certificate: eps={format_rat(self.approx_epsilon)} "
            f"snap={format_rat(self.snap_bound)} total={format_rat(self.total_bound)}"
        )


def _check_size(width: int, height: int) -> None:
    if width < 1 or height < 1:
        raise ValueError(f"raster size must be positive, got {width}x{height}")


def pixel_size(window: Window, width: int, height: int) -> tuple[Fraction, Fraction]:
    _check_size(width, height)
    return (window.right - window.left) / width, (window.top - window.bottom) / height


def pixel_center(r: Raster, row: int, col: int) -> Point2:
    if not (0 <= row < r.height and 0 <= col < r.width):
        raise IndexError(f"pixel ({row}, {col}) outside {r.width}x{r.height} raster")
    return _center(r.window, r.width, r.height, row, col)


def _center(window: Window, width: int, height: int, row: int, col: int) -> Point2:
    pw, ph = pixel_size(window, width, height)
    half = Fraction(1, 2)
    return Point2(window.left + (col + half) * pw, window.top - (row + half) * ph)


def _cell(window: Window, width: int, height: int, p: Point2) -> tuple[int, int]:
    # boundary ties go to the lower index; the outer left/top edges belong to cell 0
    pw, ph = pixel_size(window, width, height)
    col = max(0, math.ceil((p[0] - window.left) / pw) - 1)
    row = max(0, math.ceil((window.top - p[1]) / ph) - 1)
    return row, col


def snap_error_bound(window: Window, width: int, height: int) -> Fraction:
    """Sup-metric radius of a cell: half the larger pixel side."""
    pw, ph = pixel_size(window, width, height)
    return max(pw, ph) / 2


def snap_to_raster(pts: FiniteEnum[Point2], window: Window, width: int, height: int) -> Raster:
    """Set the bit of the cell containing each point."""
    _check_size(width, height)
    grid = [[False] * width for _ in range(height)]
    for p in pts:
        if not window.contains(p):
            raise ValueError(f"point ({p}) lies outside the window {window}")
        row, col = _cell(window, width, height, p)
        grid[row][col] = True
    return Raster(width, height, tuple(tuple(row) for row in grid), window)


def raster_to_enum(r: Raster) -> FiniteEnum[Point2]:
    """Interpret a raster as the enumeration of its set cell centres."""
    pts = [
        _center(r.window, r.width, r.height, i, j)
        for i, row in enumerate(r.bits)
        for j, bit in enumerate(row)
        if bit
    ]
    if not pts:
        raise ValueError("an empty raster does not denote a finite enumeration")
    return FiniteEnum(pts)


def default_epsilon(window: Window, width: int, height: int) -> Fraction:
    """A quarter pixel, giving a total error of three quarters of a pixel."""
    pw, ph = pixel_size(window, width, height)
    return max(pw, ph) / 4


def clip(p: Point2, window: Window, slack: Fraction) -> Point2:
    """Clamp ``p`` into the closed window; ``slack`` bounds the allowed overhang."""
    x, y = p
    if not (
        window.left - slack <= x <= window.right + slack
        and window.bottom - slack <= y <= window.top + slack
    ):
        raise ValueError(
            f"point ({p}) lies more than {format_rat(slack)} outside the window {window}"
        )
    return Point2(
        min(max(x, window.left), window.right),
        min(max(y, window.bottom), window.top),
    )


def plot(s: Compact, window: Window, width: int, height: int, eps=None) -> tuple[Raster, PlotCertificate]:
    """Draw ``s.approx(eps)`` onto a ``width`` x ``height`` raster.

    The certificate is fixed a priori: ``eps`` plus the half-pixel snapping
    radius, regardless of where the drawn points happen to fall.
    """
    eps = default_epsilon(window, width, height) if eps is None else pos(eps)
    approx = s.approx(eps)
    clipped = FiniteEnum(clip(p, window, eps) for p in approx)
    raster = snap_to_raster(clipped, window, width, height)
    snap = snap_error_bound(window, width, height)
    return raster, PlotCertificate(eps, snap, eps + snap)


def render_pbm(r: Raster, cert: PlotCertificate | None = None) -> str:
    """Plain PBM (P1), with the certificate as a comment line."""
    lines = ["P1"]
    if cert is not None:
        lines.append(f"# {cert}")
    lines.append(f"{r.width} {r.height}")
    lines.extend(" ".join("1" if b else "0" for b in row) for row in r.bits)
    return "\n".join(lines) + "\n"
