"""Golden variants of piecewise linear interpolation, built on cuspidal hills.

A cuspidal hill is a two-segment polyline ``A B C``; drop a perpendicular from
the apex ``B`` onto the chord ``A C`` and call the foot ``H``.  The hill is
golden when ``H`` divides the chord at a golden point.  The extension
transform inserts a golden apex inside every interval; the equal number
transform slides odd-indexed nodes along one of their incident segments until
the perpendicular foot lands on a golden point of the enclosing chord.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    PHI,
    Node,
    NodeSequence,
    left_golden_point,
    linear_interpolate,
    min_gap,
    right_golden_point,
)
from .errors import DegenerateChord, InvalidNodes, InvalidParam
from .transforms import ADDED, KEPT, MOVED, ORIGINAL, GoldenResult, check_side


@dataclass(frozen=True)
class LinearParams:
    """Parameters of the linear transforms.

    q is the apex height as a fraction of the chord length, constrained to
    (0, 0.5).  side selects which golden point of the chord carries the apex
    foot in the extension transform ("right" is the canonical choice).
    """

    q: float = 0.2
    side: str = "right"

    def __post_init__(self) -> None:
        if not (math.isfinite(self.q) and 0.0 < self.q < 0.5):
            raise InvalidParam(f"q must lie in (0, 0.5), got {self.q}")
        check_side(self.side)


@dataclass(frozen=True)
class CuspidalHill:
    """A two-segment hill with its perpendicular foot and chord ratio."""

    a: Node
    b: Node
    c: Node
    foot: Node
    ratio: float


def cuspidal_ratio(a: Node, b: Node, c: Node) -> float:
    """Chord parameter of the perpendicular foot of ``b`` on the chord ``a c``.

    Equals ``dot(b - a, c - a) / |c - a|^2``; negative when the angle at
    ``a`` is obtuse, above 1 when the angle at ``c`` is.
    """
    if a.x >= b.x or b.x >= c.x:
        raise InvalidNodes(f"hill nodes must have increasing x, got {a.x}, {b.x}, {c.x}")
    dx, dy = c.x - a.x, c.y - a.y
    denom = dx * dx + dy * dy
    if denom == 0.0:
        raise DegenerateChord("hill chord has zero length")
    return (dy * (b.y - a.y) + dx * (b.x - a.x)) / denom


def hill_of(a: Node, b: Node, c: Node) -> CuspidalHill:
    """Package a node triple as a CuspidalHill with its foot and ratio."""
    t = cuspidal_ratio(a, b, c)
    foot = Node(a.x + t * (c.x - a.x), a.y + t * (c.y - a.y))
    return CuspidalHill(a, b, c, foot, t)


def _apex(left: Node, right: Node, g: float, q: float) -> tuple[float, float]:
    """Apex whose perpendicular foot sits at chord parameter ``g`` with height ratio ``q``.

    Steep chords (|slope| >= 1) take the apex below the chord, shallow ones
    above, so profiles bulge away from the dominant direction.
    """
    dx, dy = right.x - left.x, right.y - left.y
    k = dy / dx
    x_h = left.x + dx * g
    y_h = left.y + dy * g
    if abs(k) >= 1.0:
        return (x_h + q * dy, y_h - q * dx)
    return (x_h - q * dy, y_h + q * dx)


def golden_extension_linear(
    seq: NodeSequence, params: LinearParams = LinearParams()
) -> GoldenResult:
    """Insert a golden apex in every interval, then linear-interpolate.

    Each inserted node's perpendicular foot divides the interval chord at the
    requested golden point with height ratio ``q``.  When the computed
    abscissa falls outside the safety window
    ``[x_i + t, x_{i+1} - t]``, ``t = (1 - PHI)/2 * (x_{i+1} - x_i)``,
    the height ratio is revised once to ``t / |dy|`` and the apex recomputed,
    which always lands inside the window.  Output has ``2n + 1`` nodes; the
    inserted apexes are reported as hilltops.
    """
    g = PHI if params.side == "right" else 1.0 - PHI
    nodes: list[Node] = []
    tags: list[str] = []
    hilltops: list[Node] = []
    revised: list[int] = []
    for i, (left, right) in enumerate(zip(seq.nodes, seq.nodes[1:])):
        nodes.append(left)
        tags.append(ORIGINAL)
        t = 0.5 * (1.0 - PHI) * (right.x - left.x)
        x_new, y_new = _apex(left, right, g, params.q)
        if not (left.x + t <= x_new <= right.x - t):
            # A clamped apex is only reachable when the chord has vertical
            # extent, so the revised ratio is finite.
            q_rev = t / abs(right.y - left.y)
            x_new, y_new = _apex(left, right, g, q_rev)
            revised.append(i)
        apex = Node(x_new, y_new)
        nodes.append(apex)
        tags.append(ADDED)
        hilltops.append(apex)
    nodes.append(seq.nodes[-1])
    tags.append(ORIGINAL)
    transformed = NodeSequence(tuple(nodes), seq.k0)
    return GoldenResult(
        transformed,
        tuple(tags),
        linear_interpolate(transformed),
        hilltops=tuple(hilltops),
        revised_intervals=tuple(revised),
    )


def golden_equal_number_linear(
    seq: NodeSequence, params: LinearParams = LinearParams()
) -> GoldenResult:
    """Slide odd-indexed nodes so consecutive triples become golden hills.

    For each triple ``(A, B, C) = (A_{2i-2}, A_{2i-1}, A_{2i})``:

    1. drop the perpendicular from B onto line AC; if the foot P is not
       strictly inside the chord, keep B;
    2. pick the golden point H of AC nearer to P (midpoint test, ties go
       right-anchored);
    3. extend AB when H lies right of P, else CB, and intersect that line
       with the perpendicular to AC through H;
    4. keep B whenever the intersection's abscissa leaves ``(x_A, x_C)``.

    The moved node stays on one of its original segments, so the polyline
    still passes through all input nodes.  ``params.q`` and ``params.side``
    are unused here: the construction has no height parameter and selects its
    golden point from the geometry.  Sequences with fewer than three nodes
    are returned unchanged.
    """
    del params
    nodes = list(seq.nodes)
    tags = [ORIGINAL] * len(nodes)
    hilltops: list[Node] = []
    degenerate: list[int] = []
    if seq.n >= 2:
        for i in range(1, seq.n // 2 + 1):
            a, b, c = nodes[2 * i - 2], nodes[2 * i - 1], nodes[2 * i]
            moved = _relocate_apex(a, b, c)
            if moved is None:
                tags[2 * i - 1] = KEPT
            elif moved is _DEGENERATE:
                tags[2 * i - 1] = KEPT
                degenerate.append(2 * i - 1)
            else:
                nodes[2 * i - 1] = moved
                tags[2 * i - 1] = MOVED
                hilltops.append(moved)
    transformed = NodeSequence(tuple(nodes), seq.k0)
    return GoldenResult(
        transformed,
        tuple(tags),
        linear_interpolate(transformed),
        hilltops=tuple(hilltops),
        degenerate=tuple(degenerate),
    )


#: Sentinel distinguishing "kept because degenerate" from plain rejection.
_DEGENERATE = Node(0.0, 0.0)


def _relocate_apex(a: Node, b: Node, c: Node) -> Node | None:
    k = (c.y - a.y) / (c.x - a.x)
    kk = k * k
    x_p = (k * (b.y - a.y) + kk * a.x + b.x) / (1.0 + kk)
    tol = min_gap(a.x)
    if not (a.x + tol < x_p < c.x - tol):
        return None
    x_z = 0.5 * (a.x + c.x)
    if x_p > x_z:
        x_h = right_golden_point(a.x, c.x)
        y_h = a.y + (c.y - a.y) * PHI
    else:
        x_h = left_golden_point(a.x, c.x)
        y_h = c.y - (c.y - a.y) * PHI
    anchor = a if x_h > x_p else c
    slope = (b.y - anchor.y) / (b.x - anchor.x)
    denom = 1.0 + slope * k
    if denom == 0.0:
        return _DEGENERATE
    x_new = (x_h + k * (slope * b.x + y_h - b.y)) / denom
    y_new = (b.y + slope * (k * y_h + x_h - b.x)) / denom
    if not (a.x + min_gap(a.x) < x_new < c.x - min_gap(x_new)):
        return None
    return Node(x_new, y_new)
