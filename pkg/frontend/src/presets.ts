import { Method, MethodParams, Pair } from "./types.js";

// One preset per shipped design application, pairing a node set with the
// golden method that styles it, its traditional counterpart for the compare
// overlay, and the export settings used by the 3D workflows.

export interface Preset {
    label: string;
    nodes: Pair[];
    method: Method;
    traditional: Method;
    k0: number | null;
    params: MethodParams;
    axis?: [number, number, number];
    mirrorAbout?: number;
}

const STUMP_NODES: Pair[] = [[2, 1], [9, 3], [11, 4], [19, 6], [21, 2], [24, 5]];
const LIGHT_NODES: Pair[] = [[6, 13], [20, 18], [24, 13], [38, 18], [42, 13], [56, 18], [60, 13]];
const VASE_NODES: Pair[] = [[2, 3], [14, 16], [19, 19]];
const HEADBOARD_NODES: Pair[] = [[0, 20], [4, 22], [20, 20], [35, 20]];

export const PRESETS: Record<string, Preset> = {
    stumps: {
        label: "Park stumps (equal-number step)",
        nodes: STUMP_NODES,
        method: "golden_eq_step",
        traditional: "step",
        k0: null,
        params: { side: "left" },
        axis: [0, 1, 0],
    },
    meteor: {
        label: "Meteor tracks (extension step)",
        nodes: STUMP_NODES,
        method: "golden_ext_step",
        traditional: "step",
        k0: null,
        params: { side: "left", L: 1.0 },
    },
    lights: {
        label: "Landscape lights (extension linear)",
        nodes: LIGHT_NODES,
        method: "golden_ext_linear",
        traditional: "linear",
        k0: null,
        params: { side: "right", q: 0.2 },
        axis: [0, 1, -10],
    },
    vase: {
        label: "Vase (golden curve, right)",
        nodes: VASE_NODES,
        method: "golden_ext_curve",
        traditional: "quadratic",
        k0: 3.5,
        params: { side: "right" },
        axis: [16, -17, -66],
    },
    headboard: {
        label: "Headboard (golden curve, left)",
        nodes: HEADBOARD_NODES,
        method: "golden_ext_curve",
        traditional: "quadratic",
        k0: 0,
        params: { side: "left" },
        mirrorAbout: 0,
    },
};

export const PRESET_NAMES = Object.keys(PRESETS);
