"""Golden extension of quadratic-spline interpolation, built on domed hills.

A domed hill is an inflection-free C1 arc over ``[a, b]``; its hilltop is the
point where the tangent slope equals the chord slope (the mean value theorem
guarantees one).  The hill is golden when the hilltop's perpendicular foot
divides the chord at a golden point.

The transform walks the intervals left to right.  Adding a free spline knot
inside an interval leaves one degree of freedom, which is spent making the
knot the golden hilltop of that interval's arc: its tangent must match the
chord slope and it must sit on the perpendicular to the chord through the
golden point ``H``.  Both constraints reduce to placing the knot on the line
through ``A_i`` with slope ``t``, where ``t`` folds in the start derivative
and the alternating sum of the slopes of all previously accepted segments
(the spline's knot-derivative recursion in closed form).  A knot is accepted
only if its abscissa falls strictly inside its interval; rejected intervals
are interpolated exactly as the plain quadratic spline over the remaining
nodes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    PHI,
    Node,
    NodeSequence,
    PiecewiseFunction,
    min_gap,
    quadratic_spline_interpolate,
)
from .errors import InvalidParam, MissingDerivative, NoHilltop, OutOfDomain
from .transforms import ADDED, ORIGINAL, GoldenResult, check_side

#: Probe count for the flat-hill degeneracy test.
_FLAT_PROBES = 64


@dataclass(frozen=True)
class CurveParams:
    """Parameters of the curve transform.

    keep_mask, when given, has one flag per interval; a False entry drops
    that interval's knot even if it would be valid, reverting the arc there
    to the traditional spline.
    """

    side: str = "right"
    keep_mask: tuple[bool, ...] | None = None

    def __post_init__(self) -> None:
        check_side(self.side)
        if self.keep_mask is not None:
            object.__setattr__(self, "keep_mask", tuple(bool(b) for b in self.keep_mask))


@dataclass(frozen=True)
class DomedHill:
    """An arc's endpoints, hilltop, and the hilltop foot's chord parameter."""

    a: Node
    b: Node
    hilltop: Node
    foot_ratio: float


def golden_extension_curve(seq: NodeSequence, params: CurveParams = CurveParams()) -> GoldenResult:
    """Insert golden hilltop knots interval by interval, then spline.

    Maintains the accepted node list ``B_0 .. B_d``; for interval ``i`` with
    chord slope ``q_i`` and golden point ``H``:

    ``t = (q_i - (-1)**(d+1) * k0) / 2 - sum((-1)**(d-j) * slope_j, j < d)``

    and the candidate knot solves the perpendicularity condition

    ``x = (dy * (y_h - y_i + t * x_i) + x_h * dx) / (t * dy + dx)``,
    ``y = y_i + t * (x - x_i)``,

    which for ``dy == 0`` collapses to ``x = x_h`` exactly.  The knot is
    accepted iff ``x`` lies strictly inside the interval (and the interval's
    keep_mask flag is set); a zero denominator rejects the interval and
    records it as degenerate.
    """
    if seq.k0 is None:
        raise MissingDerivative("golden curve interpolation needs k0")
    if params.keep_mask is not None and len(params.keep_mask) != seq.n:
        raise InvalidParam(
            f"keep_mask needs one flag per interval ({seq.n}), got {len(params.keep_mask)}"
        )
    g = PHI if params.side == "right" else 1.0 - PHI
    k0 = seq.k0

    accepted_nodes: list[Node] = [seq.nodes[0]]
    tags: list[str] = [ORIGINAL]
    hilltops: list[Node] = []
    accepted_flags: list[bool] = []
    degenerate: list[int] = []

    # Incremental state: d is the accepted segment count and alt_sum the
    # alternating slope sum sum((-1)**(d-j) * slope_j, j < d); appending a
    # segment of slope s updates it as alt_sum <- -(alt_sum + s).
    d = 0
    alt_sum = 0.0

    for i, (left, right) in enumerate(zip(seq.nodes, seq.nodes[1:])):
        dx = right.x - left.x
        dy = right.y - left.y
        x_h = left.x + dx * g
        y_h = left.y + dy * g
        t = 0.5 * (dy / dx - (-1.0) ** (d + 1) * k0) - alt_sum

        denom = t * dy + dx
        took = False
        if denom == 0.0:
            degenerate.append(i)
        else:
            if dy == 0.0:
                x_new = x_h
            else:
                x_new = (dy * (y_h - left.y + t * left.x) + x_h * dx) / denom
            valid = left.x + min_gap(left.x) < x_new < right.x - min_gap(x_new)
            masked_in = params.keep_mask is None or params.keep_mask[i]
            if valid and masked_in:
                knot = Node(x_new, left.y + t * (x_new - left.x))
                accepted_nodes.append(knot)
                tags.append(ADDED)
                hilltops.append(knot)
                alt_sum = -(alt_sum + t)
                d += 1
                took = True
        accepted_flags.append(took)
        last = accepted_nodes[-1]
        alt_sum = -(alt_sum + (right.y - last.y) / (right.x - last.x))
        d += 1
        accepted_nodes.append(right)
        tags.append(ORIGINAL)

    transformed = NodeSequence(tuple(accepted_nodes), k0)
    return GoldenResult(
        transformed,
        tuple(tags),
        quadratic_spline_interpolate(transformed),
        hilltops=tuple(hilltops),
        accepted=tuple(accepted_flags),
        degenerate=tuple(degenerate),
    )


def find_hilltop(f: PiecewiseFunction, a: float, b: float, target: float = PHI) -> DomedHill:
    """Locate the hilltop of ``f`` over ``[a, b]`` and its chord foot ratio.

    The derivative of a quadratic spline is continuous piecewise linear, so
    the tangent-equals-chord equation is solved exactly on every piece
    overlapping ``[a, b]``.  When several roots exist, the one whose foot
    ratio is closest to ``target`` wins (ties to the smaller abscissa): the
    measure should not penalise an arc for having one golden hilltop among
    several candidates.  An arc that coincides with its own chord has every
    point as a hilltop; by convention it reports the chord's golden point and
    ``foot_ratio = target``.
    """
    if f.degree != 2:
        raise InvalidParam(f"hilltop search needs a degree-2 function, got degree {f.degree}")
    lo, hi = f.domain
    if a < lo or b > hi or a >= b:
        raise OutOfDomain(f"[{a}, {b}] is not a proper subinterval of [{lo}, {hi}]")

    fa, fb = f(a), f(b)
    k = (fa - fb) / (a - b)
    span = b - a

    scale = 1.0 + max(abs(fa), abs(fb))
    flat = True
    for i in range(_FLAT_PROBES):
        x = a + span * (i + 0.5) / _FLAT_PROBES
        if abs(f(x) - (fa + k * (x - a))) > 1e-9 * scale:
            flat = False
            break
    if flat:
        x_top = a + span * target
        return DomedHill(Node(a, fa), Node(b, fb), Node(x_top, f(x_top)), target)

    eps = 1e-9 * span
    roots: list[float] = []
    for i in range(len(f.pieces)):
        p_lo = max(f.breakpoints[i], a)
        p_hi = min(f.breakpoints[i + 1], b)
        if p_lo > p_hi:
            continue
        _, slope0, curv = f.pieces[i]
        if curv == 0.0:
            # Linear piece: either no root, or the whole sub-span matches and
            # the point nearest the target parameter stands in for it.
            if abs(slope0 - k) <= 1e-12 * (1.0 + abs(k)):
                roots.append(min(max(a + span * target, p_lo), p_hi))
            continue
        x_root = f.breakpoints[i] + (k - slope0) / (2.0 * curv)
        if p_lo - eps <= x_root <= p_hi + eps:
            roots.append(min(max(x_root, a), b))
    if not roots:
        raise NoHilltop(f"derivative never meets the chord slope on [{a}, {b}]")

    roots.sort()
    deduped = [roots[0]]
    for x in roots[1:]:
        if x - deduped[-1] > eps:
            deduped.append(x)

    best: tuple[float, float] | None = None
    for x0 in deduped:
        ratio = _foot_ratio(a, fa, b, fb, x0, f(x0))
        if best is None or abs(ratio - target) < abs(best[1] - target):
            best = (x0, ratio)
    x0, ratio = best
    return DomedHill(Node(a, fa), Node(b, fb), Node(x0, f(x0)), ratio)


def _foot_ratio(a: float, fa: float, b: float, fb: float, x0: float, y0: float) -> float:
    dx = b - a
    dy = fb - fa
    return (dy * (y0 - fa) + dx * (x0 - a)) / (dx * dx + dy * dy)
