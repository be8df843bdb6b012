"""Compact sets as completed finite enumerations, and certified plots."""

from .compact import (
    Compact,
    compact_image,
    dist_fc,
    epsilon_net,
    from_enum,
    graph,
    interval_compact,
    member_locate,
)
from .completion import (
    Real,
    RegularFn,
    UniformFn,
    ball_locate_completion,
    bind,
    couple,
    map_,
    proj1_bar,
    proj2_bar,
    regularity_check,
    unit,
)
from .finite_enum import (
    FiniteEnum,
    fe_ball,
    fe_bind,
    fe_equiv,
    fe_locate,
    fe_unit,
    hausdorff_dist,
    hemi_dist,
)
from .metric_core import (
    POINT_METRIC,
    RAT_METRIC,
    DecidableMetric,
    LocateResult,
    Point2,
    format_rat,
    locate,
    parse_rat,
    rat_ball,
    sup_dist,
)
from .rasterizer import (
    PlotCertificate,
    Raster,
    Window,
    pixel_center,
    plot,
    raster_to_enum,
    snap_error_bound,
    snap_to_raster,
)
from .real_ops import (
    DomainError,
    affine_fn,
    clamp_fn,
    exp_rat,
    exp_real,
)

__all__ = [
    "Compact",
    "DecidableMetric",
    "DomainError",
    "FiniteEnum",
    "LocateResult",
    "POINT_METRIC",
    "PlotCertificate",
    "Point2",
    "RAT_METRIC",
    "Raster",
    "Real",
    "RegularFn",
    "UniformFn",
    "Window",
    "affine_fn",
    "ball_locate_completion",
    "bind",
    "clamp_fn",
    "compact_image",
    "couple",
    "dist_fc",
    "epsilon_net",
    "exp_rat",
    "exp_real",
    "fe_ball",
    "fe_bind",
    "fe_equiv",
    "fe_locate",
    "fe_unit",
    "format_rat",
    "from_enum",
    "graph",
    "hausdorff_dist",
    "hemi_dist",
    "interval_compact",
    "locate",
    "map_",
    "member_locate",
    "parse_rat",
    "pixel_center",
    "plot",
    "proj1_bar",
    "proj2_bar",
    "raster_to_enum",
    "rat_ball",
    "regularity_check",
    "snap_error_bound",
    "snap_to_raster",
    "sup_dist",
    "unit",
]
