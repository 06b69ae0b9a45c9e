import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { InterpolateRequest } from "../src/types.js";
import { fakeResponseFor, makeFakeService } from "./fake.js";

const REQ: InterpolateRequest = {
    method: "linear",
    nodes: [
        [0, 0],
        [1, 1],
        [2, 0],
    ],
    sample_count: 200,
};

describe("ApiClient", () => {
    it("returns the parsed document on success", async () => {
        const fake = makeFakeService();
        const api = new ApiClient("http://svc", fake.fetchFn);
        const outcome = await api.interpolate(REQ);
        expect(outcome.kind).toBe("ok");
        if (outcome.kind === "ok") {
            expect(outcome.doc.samples.length).toBe(200);
            expect(outcome.doc.method).toBe("linear");
        }
        expect(fake.interpolateCalls().length).toBe(1);
    });

    it("maps domain failures to stable codes", async () => {
        const fake = makeFakeService();
        fake.failNextWith(400, "INVALID_NODES");
        const api = new ApiClient("http://svc", fake.fetchFn);
        const outcome = await api.interpolate(REQ);
        expect(outcome).toEqual({
            kind: "error",
            error: { code: "INVALID_NODES", detail: "scripted failure" },
        });
    });

    it("discards responses overtaken by a newer request", async () => {
        const fake = makeFakeService();
        const api = new ApiClient("http://svc", fake.fetchFn);
        fake.delayNextMs(30); // first request resolves after the second
        const first = api.interpolate(REQ);
        const second = api.interpolate({ ...REQ, method: "step" });
        const [a, b] = await Promise.all([first, second]);
        expect(a.kind).toBe("stale");
        expect(b.kind).toBe("ok");
        if (b.kind === "ok") expect(b.doc.method).toBe("step");
    });

    it("keeps overlay requests out of the sequencing", async () => {
        const fake = makeFakeService();
        const api = new ApiClient("http://svc", fake.fetchFn);
        const main = await api.interpolate(REQ);
        const overlay = await api.interpolateOnce({ ...REQ, method: "quadratic", k0: 0 });
        expect(main.kind).toBe("ok");
        expect(overlay.kind).toBe("ok");
        // A later overlay must not mark the next main request stale.
        const again = await api.interpolate(REQ);
        expect(again.kind).toBe("ok");
    });

    it("passes the group size through as a query parameter", async () => {
        const fake = makeFakeService();
        const api = new ApiClient("http://svc", fake.fetchFn);
        await api.interpolate(REQ, 4);
        expect(fake.requests[0].url).toContain("m=4");
    });

    it("fetches export artifacts with their content type", async () => {
        const fake = makeFakeService();
        const api = new ApiClient("http://svc", fake.fetchFn);
        const payload = { ...fakeResponseFor(REQ), mirror_about: 0 };
        const outcome = await api.exportArtifact("svg", payload);
        expect(outcome.kind).toBe("ok");
        if (outcome.kind === "ok") {
            expect(outcome.text).toBe("<svg/>");
            expect(outcome.contentType).toContain("svg");
        }
    });
});
