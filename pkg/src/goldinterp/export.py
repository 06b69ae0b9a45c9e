"""Turn interpolation results into shareable artifacts.

Profiles are dense polylines sampled from a piecewise function, together with
marker sets (data nodes solid, hilltops hollow) and method metadata.  They
export to CSV, to equal-axis SVG plots, to surfaces of revolution as
Wavefront OBJ triangle meshes, and to mirrored outlines for symmetric shapes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from .core import Node, PiecewiseFunction
from .errors import AxisCross, InvalidParam, OverlapError

#: Pixel height/width of the larger SVG dimension.
_SVG_EXTENT = 640.0
_SVG_MARKER_RADIUS = 3.0


@dataclass(frozen=True)
class AxisLine:
    """The line a*x + b*y + c = 0."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        if self.a == 0.0 and self.b == 0.0:
            raise InvalidParam("axis line needs (a, b) != (0, 0)")
        if not all(math.isfinite(v) for v in (self.a, self.b, self.c)):
            raise InvalidParam("axis coefficients must be finite")

    def signed_distance(self, x: float, y: float) -> float:
        return (self.a * x + self.b * y + self.c) / math.hypot(self.a, self.b)


@dataclass(frozen=True)
class ProfileExport:
    """A sampled function graph plus markers and method metadata."""

    samples: tuple[tuple[float, float], ...]
    nodes: tuple[Node, ...] = ()
    added: tuple[Node, ...] = ()
    hilltops: tuple[Node, ...] = ()
    method: str = ""
    params: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "samples", tuple((float(x), float(y)) for x, y in self.samples))
        if not self.samples:
            raise InvalidParam("profile needs at least one sample")
        for (x0, _), (x1, _) in zip(self.samples, self.samples[1:]):
            if x1 < x0:
                raise InvalidParam("sample abscissae must be nondecreasing")

    def bounds(self) -> tuple[float, float, float, float]:
        """(min x, min y, max x, max y) over samples and markers."""
        pts = list(self.samples)
        pts.extend(n.as_pair() for n in self.nodes)
        pts.extend(n.as_pair() for n in self.added)
        pts.extend(n.as_pair() for n in self.hilltops)
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        return (min(xs), min(ys), max(xs), max(ys))

    def to_json_dict(self) -> dict:
        return {
            "samples": [[x, y] for x, y in self.samples],
            "nodes": [[n.x, n.y] for n in self.nodes],
            "added": [[n.x, n.y] for n in self.added],
            "hilltops": [[n.x, n.y] for n in self.hilltops],
            "method": self.method,
            "params": dict(self.params),
        }


def sample(
    f: PiecewiseFunction,
    count: int,
    *,
    nodes: Sequence[Node] = (),
    added: Sequence[Node] = (),
    hilltops: Sequence[Node] = (),
    method: str = "",
    params: Mapping[str, Any] | None = None,
) -> ProfileExport:
    """Sample ``f`` on a uniform grid merged with its breakpoints.

    Degree-0 jumps produce paired samples at the breakpoint (left limit
    first, then the right value) so the discontinuity renders as a vertical
    stroke and revolves into a closed annulus.
    """
    if count < 2:
        raise InvalidParam(f"sample count must be >= 2, got {count}")
    lo, hi = f.domain
    # Pin the endpoints and clamp the interior: lo + (hi-lo)*t can overshoot
    # hi by an ulp, which would put a grid point outside the domain.
    grid = [lo] + [
        min(max(lo + (hi - lo) * i / (count - 1), lo), hi) for i in range(1, count - 1)
    ] + [hi]
    xs = sorted(set(grid) | set(f.breakpoints))

    pts: list[tuple[float, float]] = []
    for x in xs:
        if f.degree == 0 and lo < x <= hi and x in f.breakpoints:
            i = f.breakpoints.index(x)
            left_val = f.value_on_piece(i - 1, x)
            right_val = f(x)
            pts.append((x, left_val))
            if right_val != left_val:
                pts.append((x, right_val))
        else:
            pts.append((x, f(x)))
    return ProfileExport(
        tuple(pts),
        nodes=tuple(nodes),
        added=tuple(added),
        hilltops=tuple(hilltops),
        method=method,
        params=dict(params or {}),
    )


def to_csv(p: ProfileExport) -> str:
    """CSV with header ``x,y``, one sample per line, LF endings."""
    lines = ["x,y"]
    lines.extend(f"{x!r},{y!r}" for x, y in p.samples)
    return "\n".join(lines) + "\n"


def to_svg(p: ProfileExport) -> str:
    """Equal-axis SVG plot of the profile.

    One data unit maps to the same pixel length on both axes, so the
    width/height ratio of the document equals the data bounding box ratio.
    Data nodes draw solid, added knots solid in a second colour, hilltops
    hollow.
    """
    min_x, min_y, max_x, max_y = p.bounds()
    w = max_x - min_x
    h = max_y - min_y
    # Flat or vertical profiles get a symmetric pad so the document has area.
    if w == 0.0:
        pad = max(h, 1.0) / 2
        min_x, w = min_x - pad, 2 * pad
    if h == 0.0:
        pad = max(w, 1.0) / 2
        min_y, h = min_y - pad, 2 * pad
    scale = _SVG_EXTENT / max(w, h)

    def px(x: float) -> float:
        return (x - min_x) * scale

    def py(y: float) -> float:
        return (min_y + h - y) * scale

    path = " ".join(
        f"{'M' if i == 0 else 'L'} {px(x):.4f} {py(y):.4f}" for i, (x, y) in enumerate(p.samples)
    )
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w * scale:.4f}" height="{h * scale:.4f}" '
        f'viewBox="0 0 {w * scale:.4f} {h * scale:.4f}">',
        f'<path d="{path}" fill="none" stroke="#1a1a1a" stroke-width="1.5"/>',
    ]
    for n in p.nodes:
        parts.append(
            f'<circle class="node" cx="{px(n.x):.4f}" cy="{py(n.y):.4f}" '
            f'r="{_SVG_MARKER_RADIUS}" fill="#1a1a1a"/>'
        )
    for n in p.added:
        parts.append(
            f'<circle class="added" cx="{px(n.x):.4f}" cy="{py(n.y):.4f}" '
            f'r="{_SVG_MARKER_RADIUS}" fill="#c89b00"/>'
        )
    for n in p.hilltops:
        parts.append(
            f'<circle class="hilltop" cx="{px(n.x):.4f}" cy="{py(n.y):.4f}" '
            f'r="{_SVG_MARKER_RADIUS}" fill="none" stroke="#c89b00" stroke-width="1.5"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def revolve(p: ProfileExport, axis: AxisLine, segments: int = 64) -> str:
    """Revolve the profile about ``axis`` into a triangle mesh (OBJ text).

    The 2D plane embeds as z = 0; each sample becomes a ring of ``segments``
    vertices around the axis, consecutive rings join into quad bands split
    into two triangles each, wound counterclockwise seen from outside.
    The profile must stay strictly on one side of the axis.
    """
    if segments < 3:
        raise InvalidParam(f"segments must be >= 3, got {segments}")
    if len(p.samples) < 2:
        raise InvalidParam("revolution needs at least 2 samples")

    dists = [axis.signed_distance(x, y) for x, y in p.samples]
    if any(d == 0.0 for d in dists) or (min(dists) < 0.0 < max(dists)):
        raise AxisCross("profile touches or crosses the revolution axis")

    norm = math.hypot(axis.a, axis.b)
    # u runs along the axis, v is the in-plane normal; (u, v, z) is right-handed.
    ux, uy = axis.b / norm, -axis.a / norm
    vx, vy = axis.a / norm, axis.b / norm
    ox, oy = -axis.c * axis.a / (norm * norm), -axis.c * axis.b / (norm * norm)

    rings: list[list[tuple[float, float, float]]] = []
    axial: list[float] = []
    for (x, y), r in zip(p.samples, dists):
        s = (x - ox) * ux + (y - oy) * uy
        axial.append(s)
        ring = []
        for k in range(segments):
            theta = 2.0 * math.pi * k / segments
            cv = r * math.cos(theta)
            cw = r * math.sin(theta)
            ring.append((ox + s * ux + cv * vx, oy + s * uy + cv * vy, cw))
        rings.append(ring)

    # Outward winding flips with the profile's side and the axial direction.
    flip = (dists[0] < 0.0) != (axial[-1] < axial[0])

    lines = [f"v {x:.9g} {y:.9g} {z:.9g}" for ring in rings for x, y, z in ring]
    for i in range(len(rings) - 1):
        base0 = i * segments
        base1 = (i + 1) * segments
        for k in range(segments):
            k1 = (k + 1) % segments
            quad = (base0 + k, base0 + k1, base1 + k1, base1 + k)
            tris = [(quad[0], quad[1], quad[2]), (quad[0], quad[2], quad[3])]
            for tri in tris:
                a, b, c = tri if not flip else (tri[0], tri[2], tri[1])
                lines.append(f"f {a + 1} {b + 1} {c + 1}")
    return "\n".join(lines) + "\n"


def mirror(p: ProfileExport, about_x: float) -> ProfileExport:
    """Concatenate the profile with its reflection about the vertical line ``x = about_x``.

    The line must not pass through the profile's interior; a seam sample
    lying exactly on the line is emitted once.
    """
    min_x = p.samples[0][0]
    max_x = p.samples[-1][0]
    if min_x < about_x < max_x:
        raise OverlapError(f"mirror line x={about_x} passes through the profile")

    def reflect(pt: tuple[float, float]) -> tuple[float, float]:
        return (2.0 * about_x - pt[0], pt[1])

    reflected = [reflect(pt) for pt in reversed(p.samples)]
    if about_x <= min_x:
        joined = reflected[:-1] if reflected[-1] == p.samples[0] else reflected
        samples = tuple(joined) + p.samples
    else:
        joined = reflected[1:] if reflected[0] == p.samples[-1] else reflected
        samples = p.samples + tuple(joined)

    def reflect_nodes(nodes: tuple[Node, ...]) -> tuple[Node, ...]:
        extra = tuple(
            Node(2.0 * about_x - n.x, n.y) for n in nodes if n.x != about_x
        )
        return nodes + extra

    return ProfileExport(
        samples,
        nodes=reflect_nodes(p.nodes),
        added=reflect_nodes(p.added),
        hilltops=reflect_nodes(p.hilltops),
        method=p.method,
        params=dict(p.params),
    )
