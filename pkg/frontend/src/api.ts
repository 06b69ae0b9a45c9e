import {
    ApiError,
    ExportKind,
    ExportParams,
    InterpolateRequest,
    InterpolateResponse,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export type InterpolateOutcome =
    | { kind: "ok"; doc: InterpolateResponse }
    | { kind: "error"; error: ApiError }
    | { kind: "stale" };

export type ExportOutcome =
    | { kind: "ok"; text: string; contentType: string }
    | { kind: "error"; error: ApiError };

async function readError(response: Response): Promise<ApiError> {
    try {
        const doc = await response.json();
        if (doc && typeof doc.error === "string") {
            return { code: doc.error, detail: String(doc.detail ?? "") };
        }
        return { code: `HTTP_${response.status}`, detail: JSON.stringify(doc) };
    } catch {
        return { code: `HTTP_${response.status}`, detail: response.statusText };
    }
}

/**
 * Thin client for the /v1 API with last-write-wins sequencing: responses to
 * superseded interpolate requests are reported as stale so the canvas never
 * goes backwards mid-drag.
 */
export class ApiClient {
    private seq = 0;
    private applied = 0;

    constructor(
        readonly baseUrl: string,
        private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
    ) {}

    async interpolate(req: InterpolateRequest, m = 2): Promise<InterpolateOutcome> {
        const id = ++this.seq;
        const outcome = await this.interpolateOnce(req, m);
        if (id < this.seq) return { kind: "stale" }; // a newer request exists
        this.applied = id;
        return outcome;
    }

    /** One-shot request outside the last-write-wins sequence (overlays). */
    async interpolateOnce(req: InterpolateRequest, m = 2): Promise<InterpolateOutcome> {
        let response: Response;
        try {
            response = await this.fetchFn(`${this.baseUrl}/v1/interpolate?m=${m}`, {
                method: "POST",
                headers: { "content-type": "application/json" },
                body: JSON.stringify(req),
            });
        } catch (exc) {
            return { kind: "error", error: { code: "UNREACHABLE", detail: String(exc) } };
        }
        if (!response.ok) {
            return { kind: "error", error: await readError(response) };
        }
        return { kind: "ok", doc: (await response.json()) as InterpolateResponse };
    }

    async exportArtifact(
        kind: ExportKind,
        payload: InterpolateResponse & ExportParams,
    ): Promise<ExportOutcome> {
        let response: Response;
        try {
            response = await this.fetchFn(`${this.baseUrl}/v1/export/${kind}`, {
                method: "POST",
                headers: { "content-type": "application/json" },
                body: JSON.stringify(payload),
            });
        } catch (exc) {
            return { kind: "error", error: { code: "UNREACHABLE", detail: String(exc) } };
        }
        if (!response.ok) {
            return { kind: "error", error: await readError(response) };
        }
        return {
            kind: "ok",
            text: await response.text(),
            contentType: response.headers.get("content-type") ?? "text/plain",
        };
    }

    get lastAppliedSequence(): number {
        return this.applied;
    }
}
