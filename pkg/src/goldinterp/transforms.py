"""Shared node-transform metadata.

Every golden method works in two stages: transform the data nodes, then run a
traditional interpolant over the transformed sequence.  A transform that grows
the node count is an extension transform; one that preserves it is an equal
number transform.  ``GoldenResult`` records both stages plus enough provenance
for a UI to render added/moved/kept knots distinctly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Node, NodeSequence, PiecewiseFunction
from .errors import InvalidParam

ORIGINAL = "original"
ADDED = "added"
MOVED = "moved"
KEPT = "kept"

SIDES = ("left", "right")


def check_side(side: str) -> None:
    if side not in SIDES:
        raise InvalidParam(f"side must be one of {SIDES}, got {side!r}")


@dataclass(frozen=True)
class GoldenResult:
    """Outcome of a golden transform plus its final interpolant.

    provenance
        One tag per transformed node: ``original`` (untouched input node),
        ``added`` (inserted by an extension transform), ``moved`` (relocated
        by an equal number transform), ``kept`` (transform candidate left in
        place).
    hilltops
        Added hill apexes (empty for step methods).
    accepted
        Per-original-interval insertion flags; only curve transforms set it.
    degenerate
        Indices where a degenerate construction forced the keep/reject
        fallback (node indices for equal-number transforms, interval indices
        for curve transforms).
    revised_intervals
        Intervals of the extension linear transform whose offset ratio was
        revised to respect the placement clamp.
    """

    transformed: NodeSequence
    provenance: tuple[str, ...]
    function: PiecewiseFunction
    hilltops: tuple[Node, ...] = ()
    accepted: tuple[bool, ...] | None = None
    degenerate: tuple[int, ...] = ()
    revised_intervals: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.provenance) != len(self.transformed.nodes):
            raise InvalidParam("provenance must have one tag per transformed node")

    def to_json_dict(self) -> dict:
        doc = {
            "transformed": [[n.x, n.y] for n in self.transformed.nodes],
            "provenance": list(self.provenance),
            "hilltops": [[n.x, n.y] for n in self.hilltops],
        }
        if self.transformed.k0 is not None:
            doc["k0"] = self.transformed.k0
        if self.accepted is not None:
            doc["accepted"] = list(self.accepted)
        if self.degenerate:
            doc["degenerate"] = list(self.degenerate)
        if self.revised_intervals:
            doc["revised_intervals"] = list(self.revised_intervals)
        return doc
