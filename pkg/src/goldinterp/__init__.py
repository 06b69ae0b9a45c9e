"""Golden-section-guided interpolation of degrees 0, 1, and 2.

Node transforms that bend step functions, polylines, and quadratic splines
toward golden proportions, the error criteria that measure how golden a
graph is, and export plumbing (CSV / SVG / revolution meshes) plus an HTTP
service and CLI on top.
"""

from .core import (
    PHI,
    Node,
    NodeSequence,
    PiecewiseFunction,
    evaluate,
    evaluate_derivative,
    left_golden_point,
    linear_interpolate,
    quadratic_spline_interpolate,
    right_golden_point,
    step_interpolate,
)
from .criteria import (
    ErrorSpec,
    GoldenErrorReport,
    brute_force_optimum,
    curve_ratios,
    golden_error,
    linear_ratios,
    step_ratios,
)
from .errors import (
    AxisCross,
    DegenerateChord,
    GoldenInterpError,
    InvalidNodes,
    InvalidParam,
    MissingDerivative,
    NoHilltop,
    OutOfDomain,
    OverlapError,
    TooFewNodes,
    TooFewRatios,
    TooLarge,
)
from .export import AxisLine, ProfileExport, mirror, revolve, sample, to_csv, to_svg
from .golden_curve import CurveParams, DomedHill, find_hilltop, golden_extension_curve
from .golden_linear import (
    CuspidalHill,
    LinearParams,
    cuspidal_ratio,
    golden_equal_number_linear,
    golden_extension_linear,
)
from .golden_step import StepParams, golden_equal_number_step, golden_extension_step
from .transforms import GoldenResult

__version__ = "0.1.0"

__all__ = [
    "PHI",
    "Node",
    "NodeSequence",
    "PiecewiseFunction",
    "GoldenResult",
    "StepParams",
    "LinearParams",
    "CurveParams",
    "CuspidalHill",
    "DomedHill",
    "ErrorSpec",
    "GoldenErrorReport",
    "AxisLine",
    "ProfileExport",
    "step_interpolate",
    "linear_interpolate",
    "quadratic_spline_interpolate",
    "evaluate",
    "evaluate_derivative",
    "left_golden_point",
    "right_golden_point",
    "golden_extension_step",
    "golden_equal_number_step",
    "golden_extension_linear",
    "golden_equal_number_linear",
    "cuspidal_ratio",
    "golden_extension_curve",
    "find_hilltop",
    "step_ratios",
    "linear_ratios",
    "curve_ratios",
    "golden_error",
    "brute_force_optimum",
    "sample",
    "to_csv",
    "to_svg",
    "revolve",
    "mirror",
    "GoldenInterpError",
    "InvalidNodes",
    "MissingDerivative",
    "InvalidParam",
    "OutOfDomain",
    "TooFewNodes",
    "TooFewRatios",
    "TooLarge",
    "DegenerateChord",
    "NoHilltop",
    "AxisCross",
    "OverlapError",
]
