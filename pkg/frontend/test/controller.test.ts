import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { StudioController } from "../src/controller.js";
import { strictlyIncreasing } from "../src/geometry.js";
import { PRESETS, PRESET_NAMES } from "../src/presets.js";
import { makeFakeService } from "./fake.js";

function makeController() {
    const fake = makeFakeService();
    const api = new ApiClient("http://svc", fake.fetchFn);
    const controller = new StudioController(api, () => {}, 100);
    return { fake, controller };
}

describe("preset loading", () => {
    it("issues exactly one interpolate request per preset and renders >= 200 samples", async () => {
        for (const name of PRESET_NAMES) {
            const { fake, controller } = makeController();
            await controller.loadPreset(PRESETS[name]);
            const calls = fake.interpolateCalls();
            expect(calls.length).toBe(1);
            expect(calls[0].body.sample_count).toBeGreaterThanOrEqual(200);
            expect(controller.state.response).not.toBeNull();
            expect(controller.state.response!.samples.length).toBeGreaterThanOrEqual(200);
        }
    });

    it("sends the preset's method, k0 and params", async () => {
        const { fake, controller } = makeController();
        await controller.loadPreset(PRESETS.vase);
        const body = fake.interpolateCalls()[0].body;
        expect(body.method).toBe("golden_ext_curve");
        expect(body.k0).toBe(3.5);
        expect(body.params).toEqual({ side: "right" });
    });
});

describe("drag editing", () => {
    beforeEach(() => {
        vi.useFakeTimers();
    });
    afterEach(() => {
        vi.useRealTimers();
    });

    it("debounces a burst of drags into a single request", async () => {
        const { fake, controller } = makeController();
        for (let i = 0; i < 25; i++) {
            controller.nodeDragged(1, 4 + i / 25, 3 + i / 50);
        }
        expect(fake.interpolateCalls().length).toBe(0); // still pending
        await vi.advanceTimersByTimeAsync(99);
        expect(fake.interpolateCalls().length).toBe(0);
        await vi.advanceTimersByTimeAsync(2);
        expect(fake.interpolateCalls().length).toBe(1);
    });

    it("never emits a request with non-increasing x, however wild the drag", async () => {
        const { fake, controller } = makeController();
        let state = 123456789;
        const rand = () => {
            state = (1103515245 * state + 12345) % 2147483648;
            return state / 2147483648;
        };
        for (let trial = 0; trial < 200; trial++) {
            const doc = controller.state.store.doc;
            const index = Math.floor(rand() * doc.nodes.length);
            controller.nodeDragged(index, -200 + 400 * rand(), -50 + 100 * rand());
            await vi.advanceTimersByTimeAsync(101);
        }
        const calls = fake.interpolateCalls();
        expect(calls.length).toBeGreaterThan(0);
        for (const call of calls) {
            expect(strictlyIncreasing(call.body.nodes.map((p) => p[0]))).toBe(true);
        }
    });

    it("a drag clamped to its current position sends nothing", async () => {
        const { fake, controller } = makeController();
        // Park the node against its right neighbour, then keep pushing.
        const doc = controller.state.store.doc;
        controller.nodeDragged(1, 1e9, doc.nodes[1][1]);
        await vi.advanceTimersByTimeAsync(101);
        const afterFirst = fake.interpolateCalls().length;
        expect(afterFirst).toBe(1);
        const parkedY = controller.state.store.doc.nodes[1][1];
        controller.nodeDragged(1, 2e9, parkedY); // clamps to the same spot
        await vi.advanceTimersByTimeAsync(101);
        expect(fake.interpolateCalls().length).toBe(afterFirst);
    });
});

describe("responses and errors", () => {
    it("keeps the last valid curve when the service rejects an edit", async () => {
        const { fake, controller } = makeController();
        await controller.loadPreset(PRESETS.lights);
        const good = controller.state.response;
        expect(good).not.toBeNull();
        fake.failNextWith(400, "INVALID_PARAM");
        await controller.refresh();
        expect(controller.state.toast).toEqual({
            code: "INVALID_PARAM",
            detail: "scripted failure",
        });
        expect(controller.state.response).toBe(good);
    });

    it("clears the toast on the next success", async () => {
        const { fake, controller } = makeController();
        fake.failNextWith(400, "INVALID_NODES");
        await controller.refresh();
        expect(controller.state.toast?.code).toBe("INVALID_NODES");
        await controller.refresh();
        expect(controller.state.toast).toBeNull();
    });

    it("compare overlay requests the traditional counterpart", async () => {
        const { fake, controller } = makeController();
        await controller.loadPreset(PRESETS.vase);
        await controller.compareToggled(true);
        const calls = fake.interpolateCalls();
        expect(calls.length).toBe(2);
        expect(calls[1].body.method).toBe("quadratic");
        expect(calls[1].body.k0).toBe(3.5);
        expect(controller.state.compare).not.toBeNull();
        await controller.compareToggled(false);
        expect(controller.state.compare).toBeNull();
    });
});

describe("keep mask", () => {
    beforeEach(() => {
        vi.useFakeTimers();
    });
    afterEach(() => {
        vi.useRealTimers();
    });

    it("toggling an interval refetches with the mask", async () => {
        const { fake, controller } = makeController();
        vi.useRealTimers();
        await controller.loadPreset(PRESETS.vase);
        vi.useFakeTimers();
        controller.keepMaskToggled(0);
        await vi.advanceTimersByTimeAsync(101);
        const calls = fake.interpolateCalls();
        const last = calls[calls.length - 1].body;
        expect(last.params?.keep_mask).toEqual([false, true]);
    });
});

describe("exports", () => {
    it("builds the payload from the last response plus the export params", async () => {
        const { controller } = makeController();
        await controller.loadPreset(PRESETS.vase);
        const payload = controller.exportPayload({ axis: [16, -17, -66], segments: 64 });
        expect(payload).not.toBeNull();
        expect(payload!.axis).toEqual([16, -17, -66]);
        expect(payload!.samples.length).toBeGreaterThanOrEqual(200);
    });

    it("surfaces export failures as inline toasts", async () => {
        const { fake, controller } = makeController();
        await controller.loadPreset(PRESETS.vase);
        fake.failNextWith(400, "AXIS_CROSS");
        const artifact = await controller.exportArtifact("obj", { axis: [0, 1, -10] });
        expect(artifact).toBeNull();
        expect(controller.state.toast?.code).toBe("AXIS_CROSS");
    });

    it("returns the artifact text on success", async () => {
        const { controller } = makeController();
        await controller.loadPreset(PRESETS.headboard);
        const artifact = await controller.exportArtifact("svg", { mirror_about: 0 });
        expect(artifact?.text).toBe("<svg/>");
    });
});

describe("undo", () => {
    beforeEach(() => {
        vi.useFakeTimers();
    });
    afterEach(() => {
        vi.useRealTimers();
    });

    it("restores the previous document and refetches", async () => {
        const { fake, controller } = makeController();
        const before = controller.state.store.doc.nodes.map((p) => p[0]);
        controller.nodeAdded(3.3, 1.0);
        await vi.advanceTimersByTimeAsync(101);
        expect(controller.state.store.doc.nodes.length).toBe(before.length + 1);
        controller.undo();
        await vi.advanceTimersByTimeAsync(101);
        expect(controller.state.store.doc.nodes.map((p) => p[0])).toEqual(before);
        expect(fake.interpolateCalls().length).toBe(2);
    });

    it("a whole drag gesture undoes as one step", async () => {
        const { controller } = makeController();
        const before = controller.state.store.doc.nodes.map((p) => p.slice());
        controller.dragStarted();
        for (let i = 1; i <= 10; i++) {
            controller.nodeDragged(1, 5 + i / 10, 4 - i / 10);
        }
        await vi.advanceTimersByTimeAsync(101);
        expect(controller.state.store.doc.nodes[1][0]).toBeCloseTo(6, 9);
        controller.undo();
        expect(controller.state.store.doc.nodes.map((p) => p.slice())).toEqual(before);
    });
});
