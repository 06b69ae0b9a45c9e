"""Domain types and the three traditional interpolants (degrees 0, 1, 2).

The quadratic spline is the single-start-derivative kind: the user supplies
``k0 = p'(x_0)`` and first derivatives at the interior knots follow from the
recursion ``p'_i(x_{i+1}) = 2 q_i - p'_{i-1}(x_i)`` with ``q_i`` the chord
slope of interval ``i``.  Pieces are stored in shifted-local form
``a + b (x - x_i) + c (x - x_i)^2`` to avoid cancellation at large abscissae.

All values are immutable and the functions are pure, so everything here is
safe to share across threads.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidNodes, InvalidParam, MissingDerivative, OutOfDomain

#: Positive root of g^2 + g - 1 = 0, the golden section ratio.
PHI = (math.sqrt(5.0) - 1.0) / 2.0

#: Relative gap below which two abscissae are considered coincident.
X_GAP_RTOL = 1e-12


def min_gap(x: float) -> float:
    """Smallest admissible gap to the next abscissa after ``x``."""
    return X_GAP_RTOL * max(1.0, abs(x))


def left_golden_point(a: float, b: float) -> float:
    """Golden split of ``[a, b]`` nearer to ``a``: ``b - (b - a) * PHI``."""
    return b - (b - a) * PHI


def right_golden_point(a: float, b: float) -> float:
    """Golden split of ``[a, b]`` nearer to ``b``: ``a + (b - a) * PHI``."""
    return a + (b - a) * PHI


@dataclass(frozen=True)
class Node:
    """A single interpolation data node (x, y), both finite."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidNodes(f"node coordinates must be finite, got ({self.x}, {self.y})")

    def as_pair(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class NodeSequence:
    """Ordered data nodes with strictly increasing x, plus an optional start derivative.

    ``k0`` is required only for quadratic-spline construction and is never
    estimated from the data.
    """

    nodes: tuple[Node, ...]
    k0: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", tuple(self.nodes))
        if len(self.nodes) < 2:
            raise InvalidNodes(f"need at least 2 nodes, got {len(self.nodes)}")
        for prev, cur in zip(self.nodes, self.nodes[1:]):
            if cur.x - prev.x <= min_gap(prev.x):
                raise InvalidNodes(
                    f"x-coordinates must be strictly increasing: {prev.x} !< {cur.x}"
                )
        if self.k0 is not None and not math.isfinite(self.k0):
            raise InvalidParam(f"k0 must be finite, got {self.k0}")

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[Sequence[float]], k0: float | None = None
    ) -> "NodeSequence":
        return cls(tuple(Node(float(x), float(y)) for x, y in pairs), k0)

    @property
    def n(self) -> int:
        """Number of intervals (node count minus one)."""
        return len(self.nodes) - 1

    @property
    def xs(self) -> tuple[float, ...]:
        return tuple(node.x for node in self.nodes)

    @property
    def ys(self) -> tuple[float, ...]:
        return tuple(node.y for node in self.nodes)

    def to_json_dict(self) -> dict:
        doc: dict = {"nodes": [[n.x, n.y] for n in self.nodes]}
        if self.k0 is not None:
            doc["k0"] = self.k0
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, doc: dict) -> "NodeSequence":
        if not isinstance(doc, dict) or "nodes" not in doc:
            raise InvalidNodes("node document must be an object with a 'nodes' array")
        k0 = doc.get("k0")
        return cls.from_pairs(doc["nodes"], None if k0 is None else float(k0))

    @classmethod
    def from_json(cls, text: str) -> "NodeSequence":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidNodes(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(doc)


@dataclass(frozen=True)
class PiecewiseFunction:
    """Evaluable piecewise polynomial of degree 0, 1, or 2.

    ``pieces[i]`` holds local coefficients ``(a, b, c)`` over
    ``[breakpoints[i], breakpoints[i+1]]``; the value there is
    ``a + b*(x - breakpoints[i]) + c*(x - breakpoints[i])**2``.

    Degree-0 pieces live on half-open intervals ``[x_i, x_{i+1})``.  The
    right-open convention extends to the closed right end through
    ``right_value``: the value at the final breakpoint exactly, standing in
    for the segment a further node would start there (step functions set it
    to the last node's ordinate so every node's value is attained).  At
    interior breakpoints of any degree the right piece wins, which for
    degrees 1-2 is indistinguishable because the pieces agree there.
    """

    degree: int
    breakpoints: tuple[float, ...]
    pieces: tuple[tuple[float, float, float], ...]
    right_value: float | None = None

    def __post_init__(self) -> None:
        if self.degree not in (0, 1, 2):
            raise InvalidParam(f"degree must be 0, 1 or 2, got {self.degree}")
        if len(self.pieces) != len(self.breakpoints) - 1:
            raise InvalidParam("piece count must be breakpoint count - 1")

    @property
    def domain(self) -> tuple[float, float]:
        return (self.breakpoints[0], self.breakpoints[-1])

    @property
    def domain_closure(self) -> str:
        return "half-open" if self.degree == 0 else "closed"

    def piece_index(self, x: float) -> int:
        """Index of the piece governing ``x`` (right piece wins at knots)."""
        lo, hi = self.domain
        if x < lo or x > hi:
            raise OutOfDomain(f"x={x} outside [{lo}, {hi}]")
        return min(bisect_right(self.breakpoints, x) - 1, len(self.pieces) - 1)

    def value_on_piece(self, i: int, x: float) -> float:
        a, b, c = self.pieces[i]
        dx = x - self.breakpoints[i]
        return a + dx * (b + dx * c)

    def derivative_on_piece(self, i: int, x: float) -> float:
        _, b, c = self.pieces[i]
        return b + 2.0 * c * (x - self.breakpoints[i])

    def __call__(self, x: float) -> float:
        if self.right_value is not None and x == self.breakpoints[-1]:
            return self.right_value
        return self.value_on_piece(self.piece_index(x), x)

    def derivative(self, x: float) -> float:
        return self.derivative_on_piece(self.piece_index(x), x)

    def to_json_dict(self) -> dict:
        doc = {
            "degree": self.degree,
            "breakpoints": list(self.breakpoints),
            "pieces": [list(p) for p in self.pieces],
            "domain_closure": self.domain_closure,
        }
        if self.right_value is not None:
            doc["right_value"] = self.right_value
        return doc


def step_interpolate(seq: NodeSequence) -> PiecewiseFunction:
    """Degree-0 spline: constant ``y_i`` on ``[x_i, x_{i+1})``.

    At the very last abscissa the right-piece convention closes the domain
    with the last node's own ordinate ``y_n`` (the segment a further node
    would start there), so every node's value is attained.
    """
    pieces = tuple((node.y, 0.0, 0.0) for node in seq.nodes[:-1])
    return PiecewiseFunction(0, seq.xs, pieces, right_value=seq.nodes[-1].y)


def linear_interpolate(seq: NodeSequence) -> PiecewiseFunction:
    """Degree-1 spline through every node (exact two-point form per interval)."""
    pieces = []
    for left, right in zip(seq.nodes, seq.nodes[1:]):
        slope = (right.y - left.y) / (right.x - left.x)
        pieces.append((left.y, slope, 0.0))
    return PiecewiseFunction(1, seq.xs, tuple(pieces))


def quadratic_spline_interpolate(seq: NodeSequence) -> PiecewiseFunction:
    """C1 quadratic spline with prescribed start derivative ``seq.k0``.

    Knot derivatives are propagated incrementally: with ``m_i = p'(x_i)`` and
    chord slope ``q_i``, each piece is ``y_i + m_i dx + c dx^2`` with
    ``c = (y_{i+1} - y_i - m_i h) / h^2``, which forces
    ``m_{i+1} = 2 q_i - m_i``.  This is numerically equivalent to re-summing
    the alternating series ``2 * sum((-1)^(i-j+1) q_j) + (-1)^i k0`` per knot.
    """
    if seq.k0 is None:
        raise MissingDerivative("quadratic spline needs k0, the derivative at the first node")
    pieces = []
    m = seq.k0
    for left, right in zip(seq.nodes, seq.nodes[1:]):
        h = right.x - left.x
        q = (right.y - left.y) / h
        c = (right.y - left.y - m * h) / (h * h)
        pieces.append((left.y, m, c))
        m = 2.0 * q - m
    return PiecewiseFunction(2, seq.xs, tuple(pieces))


def evaluate(f: PiecewiseFunction, x: float) -> float:
    """Value of ``f`` at ``x`` (raises OutOfDomain outside the breakpoint span)."""
    return f(x)


def evaluate_derivative(f: PiecewiseFunction, x: float) -> float:
    """First derivative of ``f`` at ``x``; zero everywhere for degree 0."""
    return f.derivative(x)
