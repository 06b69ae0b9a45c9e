"""Golden variants of degree-0 spline interpolation.

Two node transforms, each followed by the plain step interpolant:

* extension -- insert a golden split point inside every interval, so the two
  sub-segments between adjacent original nodes always stand in the golden
  ratio;
* equal number -- slide odd-indexed knots onto the golden split of their
  even-indexed neighbours' span, but only when the slide moves them left, so
  the node count and monotonicity are preserved.

``side="left"`` (default) places split points at the left golden point of
each span; ``side="right"`` mirrors every golden coefficient to ``1 - PHI``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import PHI, Node, NodeSequence, step_interpolate
from .errors import InvalidParam
from .transforms import ADDED, KEPT, MOVED, ORIGINAL, GoldenResult, check_side


@dataclass(frozen=True)
class StepParams:
    """Parameters of the step transforms.

    L is the longitudinal jump given to an inserted node when its neighbours
    share the same ordinate (a split of a flat segment must still be visible);
    pick it to suit the data scale.
    """

    L: float = 1.0
    side: str = "left"

    def __post_init__(self) -> None:
        if not math.isfinite(self.L) or self.L == 0.0:
            raise InvalidParam(f"L must be finite and nonzero, got {self.L}")
        check_side(self.side)


def _golden_coefficient(side: str) -> float:
    # "left" keeps the canonical coefficient; "right" mirrors it.
    return PHI if side == "left" else 1.0 - PHI


def golden_extension_step(seq: NodeSequence, params: StepParams = StepParams()) -> GoldenResult:
    """Insert one golden split node per interval, then step-interpolate.

    The inserted abscissa is ``x_{i+1} - (x_{i+1} - x_i) * g`` and the
    ordinate follows the same proportion, except that equal neighbour
    ordinates get ``y_{i+1} + L`` instead.  Output has ``2n + 1`` nodes.
    """
    g = _golden_coefficient(params.side)
    nodes: list[Node] = []
    tags: list[str] = []
    for left, right in zip(seq.nodes, seq.nodes[1:]):
        nodes.append(left)
        tags.append(ORIGINAL)
        x_new = right.x - (right.x - left.x) * g
        if left.y != right.y:
            y_new = right.y - (right.y - left.y) * g
        else:
            y_new = right.y + params.L
        nodes.append(Node(x_new, y_new))
        tags.append(ADDED)
    nodes.append(seq.nodes[-1])
    tags.append(ORIGINAL)
    transformed = NodeSequence(tuple(nodes), seq.k0)
    return GoldenResult(transformed, tuple(tags), step_interpolate(transformed))


def golden_equal_number_step(seq: NodeSequence, params: StepParams = StepParams()) -> GoldenResult:
    """Relocate odd-indexed knots toward golden splits, then step-interpolate.

    For ``i = 1 .. floor(n/2)`` the candidate is
    ``x_g = x_{2i} - (x_{2i} - x_{2i-2}) * g``; the knot moves only when
    ``x_g < x_{2i-1}`` (ordinates never change).  Sequences with fewer than
    three nodes are returned unchanged.
    """
    g = _golden_coefficient(params.side)
    nodes = list(seq.nodes)
    tags = [ORIGINAL] * len(nodes)
    if seq.n >= 2:
        for i in range(1, seq.n // 2 + 1):
            lo = nodes[2 * i - 2].x
            hi = nodes[2 * i].x
            x_g = hi - (hi - lo) * g
            if x_g < nodes[2 * i - 1].x:
                nodes[2 * i - 1] = Node(x_g, nodes[2 * i - 1].y)
                tags[2 * i - 1] = MOVED
            else:
                tags[2 * i - 1] = KEPT
    transformed = NodeSequence(tuple(nodes), seq.k0)
    return GoldenResult(transformed, tuple(tags), step_interpolate(transformed))
