"""Command-line front end for certified function plots.

Example (the 42x18 plot of exp on [-6, 1])::

    compactsets-plot --fn exp --domain -6 1 --window -6 3 1 0 --size 42 18

Exit status is 0 on success, 1 for usage errors and 2 when a request
violates a domain precondition.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .compact import graph, interval_compact
from .completion import UniformFn, compose, map_, unit
from .metric_core import RAT_METRIC, format_rat, parse_rat
from .rasterizer import (
    PlotCertificate,
    Raster,
    Window,
    default_epsilon,
    plot,
    render_pbm,
    snap_error_bound,
)
from .real_ops import EXP_MAX_ARG, DomainError, affine_fn, clamp_fn, exp_real

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class FunctionSpec:
    """One entry of the function menu.

    ``kind`` is ``"exp"``, ``"id"``, ``"affine"`` (``params = (a, b)``) or
    ``"clamp-exp"`` (``params = (lo, hi)``).
    """

    kind: str
    params: tuple[Fraction, ...] = ()

    def __str__(self) -> str:
        if self.kind in ("exp", "id"):
            return self.kind
        name = "affine" if self.kind == "affine" else "clamp"
        args = ",".join(format_rat(p) for p in self.params)
        return f"{name}({args})" + ("" if self.kind == "affine" else ".exp")

    def uses_exp(self) -> bool:
        return self.kind in ("exp", "clamp-exp")


@dataclass(frozen=True)
class PlotRequest:
    function: FunctionSpec
    domain: tuple[Fraction, Fraction]
    window: Window
    width: int
    height: int
    epsilon: Fraction | None = None
    format: str = "ascii"

    @property
    def effective_epsilon(self) -> Fraction:
        if self.epsilon is not None:
            return self.epsilon
        return default_epsilon(self.window, self.width, self.height)


_RAT = r"\s*[+\-−]?\d+(?:/\d+)?\s*"
_NEG_FRACTION = re.compile(r"^-\d+/\d+$")
_FN_RE = re.compile(rf"^(affine|clamp)\(({_RAT}),({_RAT})\)(\.exp|∘exp)?$")


def parse_function(text: str) -> FunctionSpec:
    """``exp``, ``id``, ``affine(a,b)`` or ``clamp(lo,hi).exp``."""
    text = text.strip()
    if text in ("exp", "id"):
        return FunctionSpec(text)
    m = _FN_RE.match(text)
    if m is None:
        raise UsageError(f"unknown function {text!r}; expected exp, id, affine(a,b) or clamp(lo,hi).exp")
    name, p, q, tail = m.groups()
    params = (parse_rat(p), parse_rat(q))
    if name == "affine" and tail is None:
        return FunctionSpec("affine", params)
    if name == "clamp" and tail is not None:
        if not params[0] < params[1]:
            raise DomainError(f"clamp needs lo < hi, got {text!r}")
        return FunctionSpec("clamp-exp", params)
    raise UsageError(f"unknown function {text!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="compactsets-plot",
        description="Plot a function as a raster with an exact Hausdorff error bound.",
    )
    p.add_argument("--fn", default="exp", help="exp | id | affine(a,b) | clamp(lo,hi).exp")
    p.add_argument("--domain", nargs=2, metavar=("A", "B"), default=["-6", "1"])
    p.add_argument("--window", nargs=4, metavar=("LEFT", "TOP", "RIGHT", "BOTTOM"), default=["-6", "3", "1", "0"])
    p.add_argument("--size", nargs=2, metavar=("W", "H"), default=["42", "18"])
    p.add_argument("--eps", default=None, help="approximation precision p/q (default: a quarter pixel)")
    p.add_argument("--format", choices=("ascii", "pbm"), default="ascii")
    return p


def _rat_arg(text: str, what: str) -> Fraction:
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise UsageError(f"{what}: {exc}") from None


def parse_request(argv: Sequence[str]) -> PlotRequest:
    """Parse CLI flags.  Raises :class:`UsageError` or :class:`DomainError`."""
    # argparse takes "-1/2" for an option; a unicode minus sidesteps that
    argv = ["−" + t[1:] if _NEG_FRACTION.match(t) else t for t in argv]
    ns = _build_parser().parse_args(argv)
    fn = parse_function(ns.fn)
    a, b = (_rat_arg(t, "--domain") for t in ns.domain)
    left, top, right, bottom = (_rat_arg(t, "--window") for t in ns.window)
    try:
        width, height = (int(t) for t in ns.size)
    except ValueError:
        raise UsageError(f"--size: expected two integers, got {ns.size}") from None
    eps = _rat_arg(ns.eps, "--eps") if ns.eps is not None else None

    if width < 1 or height < 1:
        raise DomainError(f"raster size must be positive, got {width}x{height}")
    if a > b:
        raise DomainError(f"empty domain [{format_rat(a)}, {format_rat(b)}]")
    if fn.uses_exp() and b > EXP_MAX_ARG:
        raise DomainError(
            f"exp domain bound exceeded: {format_rat(b)} > {format_rat(EXP_MAX_ARG)}"
        )
    if eps is not None and eps <= 0:
        raise DomainError(f"--eps must be positive, got {format_rat(eps)}")
    try:
        window = Window(left, top, right, bottom)
    except ValueError as exc:
        raise DomainError(f"malformed window: {exc}") from None
    return PlotRequest(fn, (a, b), window, width, height, eps, ns.format)


def format_request(req: PlotRequest) -> list[str]:
    """Argument vector that :func:`parse_request` maps back to ``req``."""
    w = req.window
    argv = [
        "--fn", str(req.function),
        "--domain", *(format_rat(v) for v in req.domain),
        "--window", *(format_rat(v) for v in (w.left, w.top, w.right, w.bottom)),
        "--size", str(req.width), str(req.height),
    ]
    if req.epsilon is not None:
        argv += ["--eps", format_rat(req.epsilon)]
    return argv + ["--format", req.format]


def build_function(spec: FunctionSpec, window: Window) -> UniformFn:
    """The plotted function ``Q -> R``, clamped to the window's vertical range."""
    clamp = clamp_fn(window.bottom, window.top)
    if spec.kind == "exp":
        inner = clamp
        base = lambda q: exp_real(unit(q, RAT_METRIC))  # noqa: E731
        modulus = lambda eps: eps / 3  # noqa: E731
    elif spec.kind == "clamp-exp":
        inner = compose(clamp, clamp_fn(*spec.params))
        base = lambda q: exp_real(unit(q, RAT_METRIC))  # noqa: E731
        modulus = lambda eps: eps / 3  # noqa: E731
    else:
        f = affine_fn(1, 0) if spec.kind == "id" else affine_fn(*spec.params)
        inner = clamp
        base = lambda q: unit(f.fn(q), RAT_METRIC)  # noqa: E731
        modulus = f.modulus
    return UniformFn(lambda q: map_(inner, base(q)), modulus, RAT_METRIC)


def run_plot(req: PlotRequest) -> tuple[Raster, PlotCertificate]:
    """interval -> graph of the clamped function -> raster."""
    domain = interval_compact(*req.domain)
    g = graph(build_function(req.function, req.window), domain)
    return plot(g, req.window, req.width, req.height, req.effective_epsilon)


def render_ascii(r: Raster, cert: PlotCertificate | None = None) -> str:
    header = f"window: {r.window}"
    if cert is not None:
        header += f" {cert}"
    rows = ("".join("#" if b else "." for b in row) for row in r.bits)
    return "\n".join([header, *rows]) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        req = parse_request(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    try:
        raster, cert = run_plot(req)
    except ValueError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    # the certificate never depends on the drawn points
    assert cert.total_bound == req.effective_epsilon + snap_error_bound(req.window, req.width, req.height)
    if req.format == "pbm":
        sys.stdout.write(render_pbm(raster, cert))
    else:
        sys.stdout.write(render_ascii(raster, cert))
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
