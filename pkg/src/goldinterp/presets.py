"""Built-in design presets: one per shipped application workflow.

Each preset pairs a node set with the golden method that styles it and the
traditional method it is compared against, so a single command (or one click
in the studio) reproduces the full design: park stumps and meteor tracks from
step functions, landscape-light profiles from piecewise lines, a vase and a
headboard from quadratic splines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

#: Stump/meteor design nodes: positions and heights pointed on the panel.
_STUMP_NODES = ((2, 1), (9, 3), (11, 4), (19, 6), (21, 2), (24, 5))

#: Landscape-light profile nodes (lamp cross-section, revolved about y = 10).
_LIGHT_NODES = ((6, 13), (20, 18), (24, 13), (38, 18), (42, 13), (56, 18), (60, 13))

#: Vase profile nodes (revolved about 16x - 17y - 66 = 0).
_VASE_NODES = ((2, 3), (14, 16), (19, 19))

#: Headboard outline nodes (mirrored about x = 0).
_HEADBOARD_NODES = ((0, 20), (4, 22), (20, 20), (35, 20))


@dataclass(frozen=True)
class Preset:
    name: str
    nodes: tuple[tuple[float, float], ...]
    golden_method: str
    traditional_method: str
    k0: float | None = None
    params: dict[str, Any] = field(default_factory=dict)
    axis: tuple[float, float, float] | None = None
    mirror_about: float | None = None


PRESETS: dict[str, Preset] = {
    "stumps": Preset(
        name="stumps",
        nodes=_STUMP_NODES,
        golden_method="golden_eq_step",
        traditional_method="step",
        params={"side": "left"},
        axis=(0.0, 1.0, 0.0),
    ),
    "meteor": Preset(
        name="meteor",
        nodes=_STUMP_NODES,
        golden_method="golden_ext_step",
        traditional_method="step",
        params={"side": "left", "L": 1.0},
    ),
    "lights": Preset(
        name="lights",
        nodes=_LIGHT_NODES,
        golden_method="golden_ext_linear",
        traditional_method="linear",
        params={"side": "right", "q": 0.2},
        axis=(0.0, 1.0, -10.0),
    ),
    "lights-eq": Preset(
        name="lights-eq",
        nodes=_LIGHT_NODES,
        golden_method="golden_eq_linear",
        traditional_method="linear",
        params={},
        axis=(0.0, 1.0, -10.0),
    ),
    "vase": Preset(
        name="vase",
        nodes=_VASE_NODES,
        golden_method="golden_ext_curve",
        traditional_method="quadratic",
        k0=3.5,
        params={"side": "right"},
        axis=(16.0, -17.0, -66.0),
    ),
    "headboard": Preset(
        name="headboard",
        nodes=_HEADBOARD_NODES,
        golden_method="golden_ext_curve",
        traditional_method="quadratic",
        k0=0.0,
        params={"side": "left"},
        mirror_about=0.0,
    ),
}
