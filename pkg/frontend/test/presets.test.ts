import { describe, expect, it } from "vitest";

import { strictlyIncreasing } from "../src/geometry.js";
import { PRESETS, PRESET_NAMES } from "../src/presets.js";

describe("design presets", () => {
    it("ships all five application workflows", () => {
        expect(PRESET_NAMES.sort()).toEqual(
            ["headboard", "lights", "meteor", "stumps", "vase"].sort(),
        );
    });

    it("every node set is a valid, strictly increasing sequence", () => {
        for (const preset of Object.values(PRESETS)) {
            expect(preset.nodes.length).toBeGreaterThanOrEqual(2);
            expect(strictlyIncreasing(preset.nodes.map((p) => p[0]))).toBe(true);
        }
    });

    it("curve presets carry their start derivative", () => {
        expect(PRESETS.vase.k0).toBe(3.5);
        expect(PRESETS.vase.params.side).toBe("right");
        expect(PRESETS.headboard.k0).toBe(0);
        expect(PRESETS.headboard.params.side).toBe("left");
    });

    it("revolution presets carry their axes", () => {
        expect(PRESETS.vase.axis).toEqual([16, -17, -66]);
        expect(PRESETS.lights.axis).toEqual([0, 1, -10]);
        expect(PRESETS.headboard.mirrorAbout).toBe(0);
    });

    it("each golden method is paired with its traditional counterpart", () => {
        expect(PRESETS.stumps.method).toBe("golden_eq_step");
        expect(PRESETS.stumps.traditional).toBe("step");
        expect(PRESETS.meteor.method).toBe("golden_ext_step");
        expect(PRESETS.lights.method).toBe("golden_ext_linear");
        expect(PRESETS.lights.traditional).toBe("linear");
        expect(PRESETS.vase.traditional).toBe("quadratic");
    });
});
