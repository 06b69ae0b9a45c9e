"""Golden-degree measures over ratio series, plus a brute-force optimality oracle.

Each interpolation family reduces to a series of per-position ratios in a
common scale where the golden targets are ``1 - PHI`` and ``PHI``:

* step -- consecutive segment-length ratios ``(x_{j+1}-x_j)/(x_{j+2}-x_j)``
  (two adjacent segments in ratio PHI make this ``1 - PHI``);
* linear -- the cuspidal-hill foot parameter of each node triple;
* curve -- the domed-hill foot parameter of each partition interval.

Five error variants measure the deviation of a ratio series from golden
targets, grouped ``m`` segments at a time: groups are laid out back to back,
each contributes its ``m - 1`` interior ratios, ratios straddling a group
boundary are skipped, and a shorter tail group (indexed by the global
position) picks up whatever remains.  The averaged form divides by the term
count ``(m-1)(l+1) + max(0, n-1-m(l+1))`` with ``l = floor(n/m) - 1`` so
series of different lengths compare fairly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import PHI, NodeSequence, PiecewiseFunction
from .errors import InvalidParam, TooFewNodes, TooFewRatios, TooLarge
from .golden_curve import find_hilltop
from .golden_linear import cuspidal_ratio

VARIANTS = ("left", "right", "mixed", "left_right", "right_left")
FORMS = ("absolute", "squared")

#: Largest broadcast block the grid search materialises at once.
_MAX_BLOCK = 8_000_000


@dataclass(frozen=True)
class ErrorSpec:
    """Which golden error to compute: variant, group size, form, averaging."""

    variant: str
    m: int = 2
    form: str = "absolute"
    averaged: bool = False

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise InvalidParam(f"variant must be one of {VARIANTS}, got {self.variant!r}")
        if self.m < 2:
            raise InvalidParam(f"group size m must be >= 2, got {self.m}")
        if self.form not in FORMS:
            raise InvalidParam(f"form must be one of {FORMS}, got {self.form!r}")


@dataclass(frozen=True)
class GoldenErrorReport:
    """A computed golden error with the ratios and targets that entered it."""

    spec: ErrorSpec
    value: float
    count: int
    ratio_series: tuple[float, ...]
    target_series: tuple[float, ...]

    def to_json_dict(self) -> dict:
        return {
            "variant": self.spec.variant,
            "m": self.spec.m,
            "form": self.spec.form,
            "averaged": self.spec.averaged,
            "value": self.value,
            "count": self.count,
            "ratios": list(self.ratio_series),
            "targets": list(self.target_series),
        }


def step_ratios(seq: NodeSequence) -> list[float]:
    """Consecutive-pair segment ratios of a node sequence (needs n >= 2)."""
    xs = seq.xs
    if seq.n < 2:
        raise TooFewNodes("segment ratios need at least 3 nodes")
    return [(xs[j + 1] - xs[j]) / (xs[j + 2] - xs[j]) for j in range(seq.n - 1)]


def linear_ratios(seq: NodeSequence) -> list[float]:
    """Cuspidal-hill foot parameters of consecutive node triples (needs n >= 2)."""
    if seq.n < 2:
        raise TooFewNodes("hill ratios need at least 3 nodes")
    nodes = seq.nodes
    return [cuspidal_ratio(nodes[j], nodes[j + 1], nodes[j + 2]) for j in range(seq.n - 1)]


def curve_ratios(
    f: PiecewiseFunction, partition: Sequence[float], target: float = PHI
) -> list[float]:
    """Domed-hill foot parameters of ``f`` over a strictly increasing partition."""
    pts = [float(x) for x in partition]
    if len(pts) < 2:
        raise InvalidParam("partition needs at least 2 points")
    if any(b <= a for a, b in zip(pts, pts[1:])):
        raise InvalidParam("partition must be strictly increasing")
    return [find_hilltop(f, a, b, target).foot_ratio for a, b in zip(pts, pts[1:])]


def _term_layout(n: int, m: int) -> list[tuple[int, int]]:
    """(ratio index, alternation index) pairs of the grouped double sum.

    ``n`` is the segment count; full groups reset the alternation index,
    the tail group keeps the global one.
    """
    l = n // m - 1
    layout = [(i * m + j, j) for i in range(l + 1) for j in range(m - 1)]
    layout.extend((j, j) for j in range(m * (l + 1), n - 1))
    return layout


def _fixed_target(variant: str, alt: int) -> float:
    if variant == "left":
        return 1.0 - PHI
    if variant == "right":
        return PHI
    if variant == "left_right":
        return 1.0 - PHI if alt % 2 == 0 else PHI
    if variant == "right_left":
        return PHI if alt % 2 == 0 else 1.0 - PHI
    raise InvalidParam(f"variant {variant!r} has no ratio-independent target")


def golden_error(ratios: Iterable[float], spec: ErrorSpec) -> GoldenErrorReport:
    """Accumulate a ratio series' deviations from its golden targets.

    The mixed variant targets ``1 - PHI`` where the ratio is below one half
    (local left segment shorter) and ``PHI`` otherwise, ties to ``PHI``.
    """
    series = [float(r) for r in ratios]
    if not series:
        raise TooFewRatios("golden error needs at least one ratio")
    n = len(series) + 1
    total = 0.0
    included: list[float] = []
    targets: list[float] = []
    for idx, alt in _term_layout(n, spec.m):
        r = series[idx]
        if spec.variant == "mixed":
            tgt = 1.0 - PHI if r < 0.5 else PHI
        else:
            tgt = _fixed_target(spec.variant, alt)
        dev = r - tgt
        total += dev * dev if spec.form == "squared" else abs(dev)
        included.append(r)
        targets.append(tgt)
    count = len(included)
    value = total / count if spec.averaged else total
    return GoldenErrorReport(spec, value, count, tuple(included), tuple(targets))


def _grid_error(node_xs: list, spec: ErrorSpec):
    """Golden error over node abscissae that may be scalars or broadcast arrays."""
    n = len(node_xs) - 1
    total = 0.0
    layout = _term_layout(n, spec.m)
    for idx, alt in layout:
        r = (node_xs[idx + 1] - node_xs[idx]) / (node_xs[idx + 2] - node_xs[idx])
        if spec.variant == "mixed":
            tgt = np.where(np.asarray(r) < 0.5, 1.0 - PHI, PHI)
        else:
            tgt = _fixed_target(spec.variant, alt)
        dev = r - tgt
        total = total + (dev * dev if spec.form == "squared" else np.abs(dev))
    if spec.averaged:
        total = total / len(layout)
    return total


def brute_force_optimum(
    seq: NodeSequence,
    method: str,
    spec: ErrorSpec,
    grid: int = 200,
) -> tuple[tuple[float, ...], float]:
    """Exhaustively minimise a golden error over the free step-knot positions.

    ``method="ext_step"`` searches the inserted knot of every interval over
    the open interval; ``method="eq_step"`` searches each movable odd knot
    over ``(x_{2i-2}, x_{2i-1}]``.  The search is a deterministic
    coarse-to-fine grid scan: a full ``grid``-point pass per variable, then
    two zoom passes of the same size around the incumbent (ties broken to
    the lexicographically smallest position).  Desk scale only.
    """
    if method not in ("ext_step", "eq_step"):
        raise InvalidParam(f"method must be ext_step or eq_step, got {method!r}")
    if grid < 1:
        raise InvalidParam(f"grid must be >= 1, got {grid}")
    if seq.n > 4 or grid > 200:
        raise TooLarge(f"instance too large for brute force (n={seq.n}, grid={grid})")

    xs = seq.xs
    template: list[float | None] = []
    bounds: list[tuple[float, float, bool]] = []  # (lo, hi, hi_inclusive)
    if method == "ext_step":
        for i in range(seq.n):
            template.append(xs[i])
            template.append(None)
            bounds.append((xs[i], xs[i + 1], False))
        template.append(xs[-1])
    else:
        template = list(xs)
        for i in range(1, seq.n // 2 + 1):
            template[2 * i - 1] = None
            bounds.append((xs[2 * i - 2], xs[2 * i - 1], True))

    free_slots = [i for i, v in enumerate(template) if v is None]
    if not free_slots:
        fixed = [float(v) for v in template]
        ratios = [
            (fixed[j + 1] - fixed[j]) / (fixed[j + 2] - fixed[j]) for j in range(len(fixed) - 2)
        ]
        return (), golden_error(ratios, spec).value

    cands: list[np.ndarray] = []
    for lo, hi, hi_inclusive in bounds:
        t = np.arange(1, grid + 1, dtype=float)
        cands.append(lo + (hi - lo) * t / (grid if hi_inclusive else grid + 1))

    best_pos, best_val = _grid_pass(template, free_slots, cands, spec)
    for _ in range(2):
        refined: list[np.ndarray] = []
        for k, (lo, hi, hi_inclusive) in enumerate(bounds):
            arr = cands[k]
            cell = (arr[-1] - arr[0]) / (len(arr) - 1) if len(arr) > 1 else 0.0
            inset = (hi - lo) * 1e-12
            box_lo = max(best_pos[k] - cell, lo + inset)
            box_hi = min(best_pos[k] + cell, hi if hi_inclusive else hi - inset)
            refined.append(np.linspace(box_lo, box_hi, grid))
        cands = refined
        pos, val = _grid_pass(template, free_slots, cands, spec)
        if val < best_val:
            best_pos, best_val = pos, val
    return tuple(best_pos), float(best_val)


def _grid_pass(
    template: list,
    free_slots: list[int],
    cands: list[np.ndarray],
    spec: ErrorSpec,
) -> tuple[list[float], float]:
    nf = len(cands)
    tail = 1
    for c in cands[1:]:
        tail *= len(c)
    block = max(1, _MAX_BLOCK // max(tail, 1))

    best_val = math.inf
    best_idx: tuple[int, ...] | None = None
    for start in range(0, len(cands[0]), block):
        axes = [cands[0][start : start + block]] + cands[1:]
        shaped = []
        for k, axis in enumerate(axes):
            shape = [1] * nf
            shape[k] = len(axis)
            shaped.append(axis.reshape(shape))
        node_xs = list(template)
        for k, slot in enumerate(free_slots):
            node_xs[slot] = shaped[k]
        err = np.broadcast_to(
            np.asarray(_grid_error(node_xs, spec), dtype=float),
            tuple(len(a) for a in axes),
        )
        flat = int(np.argmin(err))
        val = float(err.flat[flat])
        if val < best_val:
            idx = list(np.unravel_index(flat, err.shape))
            idx[0] += start
            best_val = val
            best_idx = tuple(idx)
    return [float(cands[k][best_idx[k]]) for k in range(nf)], best_val
