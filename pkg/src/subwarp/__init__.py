"""Dynamic time warping with warping paths simplified into a few straight
segments, plus per-segment compression/shift/amplitude metrics and SVG views.

>>> import subwarp
>>> r = subwarp.simplify([0, 1, 2, 1, 0], [0, 0, 1, 2, 1, 0])
>>> r.simplified.key_points
[(1, 1), (1, 2), (5, 6)]
>>> [(s.K, s.sigma) for s in subwarp.report(r.simplified, [0, 1, 2, 1, 0], [0, 0, 1, 2, 1, 0])[0]]
[(1, 0), (0, 1)]
"""
from .dtw import DtwResult, accumulate, backtrack, build_cost_matrix, dtw, dtw_distance
from .io import ingest
from .metrics import (
    SHIFT_DEFINITIONS,
    AmplitudeBand,
    SegmentReport,
    amplitude_band,
    compression,
    report,
    shift,
)
from .path import (
    PathSegment,
    PathViolation,
    WarpingPath,
    linear_path_cost,
    optimal_path_cost,
    path_segment_cost,
    rasterize_chain,
    rasterize_linear,
    rasterize_simplified,
    validate_path,
)
from .segmenter import (
    DswResult,
    SimplifiedPath,
    ToleranceParams,
    ToleranceSpec,
    derive_tolerances,
    farthest_point,
    merge_phase,
    simplify,
    simplify_path,
    simplify_result,
    split_phase,
    tolerance_check,
)
from .series import MANHATTAN, SQEUCLIDEAN, CostFunction, InputError, Series
from .svg import RenderSpec, render_matrix_paths, render_point_to_point, render_segmented

__version__ = "0.1.0"

__all__ = [
    "AmplitudeBand", "CostFunction", "DswResult", "DtwResult", "InputError", "MANHATTAN",
    "PathSegment", "PathViolation", "RenderSpec", "SHIFT_DEFINITIONS", "SQEUCLIDEAN",
    "SegmentReport", "Series", "SimplifiedPath", "ToleranceParams", "ToleranceSpec",
    "WarpingPath", "accumulate", "amplitude_band", "backtrack", "build_cost_matrix",
    "compression", "derive_tolerances", "dtw", "dtw_distance", "farthest_point", "ingest",
    "linear_path_cost", "merge_phase", "optimal_path_cost", "path_segment_cost",
    "rasterize_chain", "rasterize_linear", "rasterize_simplified", "render_matrix_paths",
    "render_point_to_point", "render_segmented", "report", "shift", "simplify",
    "simplify_path", "simplify_result", "split_phase", "tolerance_check", "validate_path",
]
