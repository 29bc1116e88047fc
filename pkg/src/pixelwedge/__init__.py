"""pixelwedge: exact digitization of rational-slope angles on the pixel grid."""

from .digitize import (
    AngleSpec,
    GridPath,
    PixelIndex,
    Point,
    Slopes,
    boundary_loops,
    cells_enclosed,
    digitize_angle_path,
    digitize_polyline,
    digitize_segment,
    pixel_in_angle,
    round_nearest,
    trace_region_boundary,
)
from .errors import (
    DomainError,
    EmptyRegion,
    EmptySet,
    HalfIntegerTie,
    InvalidAxis,
    ParallelSlopes,
    PartitionBoundary,
    PixelCenterHit,
    UnsupportedFormat,
    WindowTooSmall,
)
from .exact import Rational, ceil_exact, extended_gcd, format_rational, gcd, parse_rational
from .partition import Parallelogram, PartitionLocator, cell_fragments, partition_unit_square
from .render import RenderOptions, parse_pbm, render_partition, render_pixelset
from .shapes import (
    RegionParams,
    ShapeClass,
    canonicalize,
    class_index,
    class_of_params,
    default_window,
    enumerate_shapes,
    equivalent,
    reflection_symmetric,
    region_params,
    shape_of_spec,
    shift_params,
)
from .verify import (
    ClassHistogram,
    SweepReport,
    exact_class_areas,
    hobby_region_check,
    sample_class_frequencies,
    theorem_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "AngleSpec",
    "ClassHistogram",
    "DomainError",
    "EmptyRegion",
    "EmptySet",
    "GridPath",
    "HalfIntegerTie",
    "InvalidAxis",
    "Parallelogram",
    "ParallelSlopes",
    "PartitionBoundary",
    "PartitionLocator",
    "PixelCenterHit",
    "PixelIndex",
    "Point",
    "Rational",
    "RegionParams",
    "RenderOptions",
    "ShapeClass",
    "Slopes",
    "SweepReport",
    "UnsupportedFormat",
    "WindowTooSmall",
    "boundary_loops",
    "canonicalize",
    "cell_fragments",
    "cells_enclosed",
    "ceil_exact",
    "class_index",
    "class_of_params",
    "default_window",
    "digitize_angle_path",
    "digitize_polyline",
    "digitize_segment",
    "enumerate_shapes",
    "equivalent",
    "exact_class_areas",
    "extended_gcd",
    "format_rational",
    "gcd",
    "hobby_region_check",
    "parse_pbm",
    "parse_rational",
    "partition_unit_square",
    "pixel_in_angle",
    "reflection_symmetric",
    "region_params",
    "render_partition",
    "render_pixelset",
    "round_nearest",
    "sample_class_frequencies",
    "shape_of_spec",
    "shift_params",
    "theorem_sweep",
    "trace_region_boundary",
]
