import { describe, expect, it } from "vitest";

import { clampDragX, minNodeGap, strictlyIncreasing, Viewport } from "../src/geometry.js";

function mulberry(seed: number): () => number {
    let a = seed >>> 0;
    return () => {
        a = (a + 0x6d2b79f5) >>> 0;
        let t = a;
        t = Math.imul(t ^ (t >>> 15), t | 1);
        t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
        return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
    };
}

describe("Viewport", () => {
    it("maps one data unit to the same pixel length on both axes", () => {
        const view = new Viewport();
        view.fit({ minX: 2, minY: 1, maxX: 24, maxY: 6 }, 1000, 640);
        for (const zoom of [1, 1.7, 0.3]) {
            view.zoomAt(300, 200, zoom);
            const o = view.toPixel(5, 5);
            const dx = view.toPixel(6, 5);
            const dy = view.toPixel(5, 6);
            expect(Math.abs(dx.px - o.px)).toBeCloseTo(Math.abs(dy.py - o.py), 9);
        }
    });

    it("round-trips data through pixels", () => {
        const view = new Viewport();
        view.fit({ minX: -10, minY: -5, maxX: 30, maxY: 25 }, 800, 600);
        const rand = mulberry(7);
        for (let i = 0; i < 50; i++) {
            const x = -10 + 40 * rand();
            const y = -5 + 30 * rand();
            const { px, py } = view.toPixel(x, y);
            const back = view.toData(px, py);
            expect(back.x).toBeCloseTo(x, 9);
            expect(back.y).toBeCloseTo(y, 9);
        }
    });

    it("keeps the anchor fixed while zooming", () => {
        const view = new Viewport();
        view.fit({ minX: 0, minY: 0, maxX: 10, maxY: 10 }, 500, 500);
        const before = view.toData(123, 77);
        view.zoomAt(123, 77, 1.8);
        const after = view.toData(123, 77);
        expect(after.x).toBeCloseTo(before.x, 9);
        expect(after.y).toBeCloseTo(before.y, 9);
    });

    it("fits the bounds into the pixel area", () => {
        const view = new Viewport();
        view.fit({ minX: 2, minY: 1, maxX: 24, maxY: 6 }, 1000, 640, 40);
        for (const [x, y] of [
            [2, 1],
            [24, 6],
            [2, 6],
            [24, 1],
        ]) {
            const { px, py } = view.toPixel(x, y);
            expect(px).toBeGreaterThanOrEqual(0);
            expect(px).toBeLessThanOrEqual(1000);
            expect(py).toBeGreaterThanOrEqual(0);
            expect(py).toBeLessThanOrEqual(640);
        }
    });
});

describe("clampDragX", () => {
    it("never lets a node cross its neighbours", () => {
        const rand = mulberry(42);
        for (let trial = 0; trial < 300; trial++) {
            const n = 2 + Math.floor(rand() * 8);
            const xs: number[] = [];
            let x = -50 + 100 * rand();
            for (let i = 0; i < n; i++) {
                x += 0.1 + 10 * rand();
                xs.push(x);
            }
            const index = Math.floor(rand() * n);
            const desired = -100 + 200 * rand(); // wildly anywhere
            const moved = xs.slice();
            moved[index] = clampDragX(xs, index, desired);
            expect(strictlyIncreasing(moved)).toBe(true);
        }
    });

    it("passes through already admissible positions", () => {
        const xs = [0, 1, 2];
        expect(clampDragX(xs, 1, 1.5)).toBe(1.5);
    });

    it("clamps to a strictly interior position with a positive gap", () => {
        const xs = [0, 1, 2];
        const clamped = clampDragX(xs, 1, 99);
        expect(clamped).toBeLessThan(2);
        expect(clamped).toBeGreaterThan(2 - 2 * minNodeGap(2));
    });

    it("endpoints are free on their open side", () => {
        const xs = [0, 1, 2];
        expect(clampDragX(xs, 0, -50)).toBe(-50);
        expect(clampDragX(xs, 2, 50)).toBe(50);
    });
});
