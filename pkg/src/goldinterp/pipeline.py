"""Method dispatch shared by the HTTP service and the CLI.

Traditional methods are wrapped into the same result shape as the golden
ones (identity transform, every node tagged original) so downstream
consumers handle a single structure.
"""

from __future__ import annotations

from typing import Any, Mapping

from . import criteria, export
from .core import (
    PHI,
    NodeSequence,
    linear_interpolate,
    quadratic_spline_interpolate,
    step_interpolate,
)
from .errors import InvalidParam, NoHilltop, TooFewNodes
from .golden_curve import CurveParams, golden_extension_curve
from .golden_linear import LinearParams, golden_equal_number_linear, golden_extension_linear
from .golden_step import StepParams, golden_equal_number_step, golden_extension_step
from .transforms import ORIGINAL, GoldenResult

METHODS = (
    "step",
    "linear",
    "quadratic",
    "golden_ext_step",
    "golden_eq_step",
    "golden_ext_linear",
    "golden_eq_linear",
    "golden_ext_curve",
)

_STEP_FAMILY = ("step", "golden_ext_step", "golden_eq_step")
_LINEAR_FAMILY = ("linear", "golden_ext_linear", "golden_eq_linear")
_CURVE_FAMILY = ("quadratic", "golden_ext_curve")


def normalize_method(name: str) -> str:
    method = name.replace("-", "_")
    if method not in METHODS:
        raise InvalidParam(f"unknown method {name!r}; expected one of {METHODS}")
    return method


def _traditional(seq: NodeSequence, f) -> GoldenResult:
    return GoldenResult(seq, (ORIGINAL,) * len(seq.nodes), f(seq))


def run_method(seq: NodeSequence, method: str, params: Mapping[str, Any] | None = None) -> GoldenResult:
    """Run one interpolation method over ``seq`` with a flat parameter mapping.

    Recognised parameters: ``L`` and ``side`` for step transforms, ``q`` and
    ``side`` for linear ones, ``side`` and ``keep_mask`` for the curve.
    Irrelevant entries are ignored so one parameter panel can drive every
    method.
    """
    params = dict(params or {})
    method = normalize_method(method)
    if method == "step":
        return _traditional(seq, step_interpolate)
    if method == "linear":
        return _traditional(seq, linear_interpolate)
    if method == "quadratic":
        return _traditional(seq, quadratic_spline_interpolate)
    if method in ("golden_ext_step", "golden_eq_step"):
        sp = StepParams(
            L=float(params.get("L", 1.0)),
            side=str(params.get("side", "left")),
        )
        op = golden_extension_step if method == "golden_ext_step" else golden_equal_number_step
        return op(seq, sp)
    if method in ("golden_ext_linear", "golden_eq_linear"):
        lp = LinearParams(
            q=float(params.get("q", 0.2)),
            side=str(params.get("side", "right")),
        )
        op = golden_extension_linear if method == "golden_ext_linear" else golden_equal_number_linear
        return op(seq, lp)
    mask = params.get("keep_mask")
    cp = CurveParams(
        side=str(params.get("side", "right")),
        keep_mask=None if mask is None else tuple(bool(b) for b in mask),
    )
    return golden_extension_curve(seq, cp)


def profile_of(
    result: GoldenResult,
    sample_count: int,
    method: str,
    params: Mapping[str, Any] | None = None,
) -> export.ProfileExport:
    """Sample a result's function, attaching provenance-derived markers."""
    originals = tuple(
        node
        for node, tag in zip(result.transformed.nodes, result.provenance)
        if tag == ORIGINAL
    )
    moved = tuple(
        node
        for node, tag in zip(result.transformed.nodes, result.provenance)
        if tag != ORIGINAL
    )
    return export.sample(
        result.function,
        sample_count,
        nodes=originals,
        added=moved,
        hilltops=result.hilltops,
        method=method,
        params=dict(params or {}),
    )


def error_reports(
    seq: NodeSequence,
    result: GoldenResult,
    method: str,
    m: int = 2,
    side: str | None = None,
) -> list[dict]:
    """All five golden error variants (plain and averaged) at group size ``m``.

    Step and linear families measure the transformed node sequence; the curve
    family measures the final function partitioned at the original abscissae.
    Returns an empty list when the data is too short to form ratios.
    """
    method = normalize_method(method)
    try:
        if method in _STEP_FAMILY:
            ratios = criteria.step_ratios(result.transformed)
        elif method in _LINEAR_FAMILY:
            ratios = criteria.linear_ratios(result.transformed)
        else:
            target = PHI if (side or "right") == "right" else 1.0 - PHI
            ratios = criteria.curve_ratios(result.function, seq.xs, target)
    except (TooFewNodes, NoHilltop):
        return []
    reports = []
    for variant in criteria.VARIANTS:
        for averaged in (False, True):
            spec = criteria.ErrorSpec(variant=variant, m=m, averaged=averaged)
            reports.append(criteria.golden_error(ratios, spec).to_json_dict())
    return reports


def interpolate_response(
    seq: NodeSequence,
    method: str,
    params: Mapping[str, Any] | None = None,
    sample_count: int = 200,
    m: int = 2,
) -> dict:
    """Full wire-format response for one interpolation request."""
    method = normalize_method(method)
    params = dict(params or {})
    if sample_count < 2:
        raise InvalidParam(f"sample_count must be >= 2, got {sample_count}")
    result = run_method(seq, method, params)
    profile = profile_of(result, sample_count, method, params)
    doc: dict = {
        "method": method,
        "params": params,
        "k0": seq.k0,
        "samples": [[x, y] for x, y in profile.samples],
        "transformed_nodes": [[n.x, n.y] for n in result.transformed.nodes],
        "provenance": list(result.provenance),
        "hilltops": [[n.x, n.y] for n in result.hilltops],
        "accepted": None if result.accepted is None else list(result.accepted),
        "degenerate": list(result.degenerate),
        "revised_intervals": list(result.revised_intervals),
        "error_reports": error_reports(seq, result, method, m=m, side=params.get("side")),
    }
    return doc
