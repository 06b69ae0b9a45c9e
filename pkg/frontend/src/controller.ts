import { ApiClient } from "./api.js";
import { Debouncer } from "./debounce.js";
import { Preset } from "./presets.js";
import { DocumentStore } from "./store.js";
import {
    ApiError,
    ExportKind,
    ExportParams,
    InterpolateRequest,
    InterpolateResponse,
    Method,
    MethodParams,
} from "./types.js";

export interface StudioState {
    store: DocumentStore;
    response: InterpolateResponse | null;
    compare: InterpolateResponse | null;
    compareEnabled: boolean;
    toast: ApiError | null;
    busy: boolean;
}

const TRADITIONAL_OF: Record<Method, Method> = {
    step: "step",
    linear: "linear",
    quadratic: "quadratic",
    golden_ext_step: "step",
    golden_eq_step: "step",
    golden_ext_linear: "linear",
    golden_eq_linear: "linear",
    golden_ext_curve: "quadratic",
};

/**
 * Edit loop: every node or parameter edit debounces into a single
 * interpolate request; responses apply last-write-wins; failures surface as
 * a toast while the last valid curve stays on screen.
 */
export class StudioController {
    readonly state: StudioState;
    private readonly debouncer: Debouncer;

    constructor(
        private readonly api: ApiClient,
        private readonly onRender: (state: StudioState) => void = () => {},
        debounceMs = 100,
    ) {
        this.state = {
            store: new DocumentStore(),
            response: null,
            compare: null,
            compareEnabled: false,
            toast: null,
            busy: false,
        };
        this.debouncer = new Debouncer(debounceMs);
    }

    /** Load a preset and issue exactly one interpolate request. */
    async loadPreset(preset: Preset): Promise<void> {
        this.debouncer.cancel();
        this.state.store.loadPreset(preset);
        await this.refresh();
    }

    /** Call once when a drag gesture begins so it undoes as one step. */
    dragStarted(): void {
        this.state.store.snapshot();
    }

    /** Drag handler; the applied abscissa is clamped between neighbours. */
    nodeDragged(index: number, x: number, y: number): void {
        if (this.state.store.moveNode(index, x, y)) {
            this.scheduleRefresh();
        }
    }

    nodeAdded(x: number, y: number): void {
        this.state.store.addNode(x, y);
        this.scheduleRefresh();
    }

    nodeDeleted(index: number): void {
        if (this.state.store.deleteNode(index)) {
            this.scheduleRefresh();
        }
    }

    methodChanged(method: Method): void {
        this.state.store.setMethod(method);
        this.scheduleRefresh();
    }

    paramChanged<K extends keyof MethodParams>(key: K, value: MethodParams[K]): void {
        this.state.store.setParam(key, value);
        this.scheduleRefresh();
    }

    k0Changed(k0: number | null): void {
        this.state.store.setK0(k0);
        this.scheduleRefresh();
    }

    mChanged(m: number): void {
        this.state.store.setM(m);
        this.scheduleRefresh();
    }

    keepMaskToggled(interval: number): void {
        this.state.store.toggleKeepMask(interval);
        this.scheduleRefresh();
    }

    undo(): void {
        if (this.state.store.undo()) {
            this.scheduleRefresh();
        }
    }

    async compareToggled(enabled: boolean): Promise<void> {
        this.state.compareEnabled = enabled;
        if (!enabled) {
            this.state.compare = null;
            this.onRender(this.state);
            return;
        }
        await this.refreshCompare();
    }

    private scheduleRefresh(): void {
        this.onRender(this.state); // immediate visual feedback for the edit
        this.debouncer.schedule(() => void this.refresh());
    }

    buildRequest(): InterpolateRequest {
        const doc = this.state.store.doc;
        return {
            method: doc.method,
            nodes: doc.nodes.map((p) => [p[0], p[1]]),
            k0: doc.k0,
            params: doc.params,
            sample_count: Math.max(doc.sampleCount, 200),
        };
    }

    async refresh(): Promise<void> {
        this.state.busy = true;
        this.onRender(this.state);
        const outcome = await this.api.interpolate(this.buildRequest(), this.state.store.doc.m);
        if (outcome.kind === "stale") return; // a newer request is in flight
        this.state.busy = false;
        if (outcome.kind === "ok") {
            this.state.response = outcome.doc;
            this.state.toast = null;
            if (this.state.compareEnabled) await this.refreshCompare();
        } else {
            // Keep the last valid curve on screen; just surface the code.
            this.state.toast = outcome.error;
        }
        this.onRender(this.state);
    }

    private async refreshCompare(): Promise<void> {
        const doc = this.state.store.doc;
        const request = this.buildRequest();
        request.method = TRADITIONAL_OF[doc.method];
        request.params = {};
        const outcome = await this.api.interpolateOnce(request, doc.m);
        if (outcome.kind === "ok") {
            this.state.compare = outcome.doc;
        } else if (outcome.kind === "error") {
            this.state.compare = null;
        }
        this.onRender(this.state);
    }

    /** Assemble an export body from the last response plus export controls. */
    exportPayload(extra: ExportParams): (InterpolateResponse & ExportParams) | null {
        if (!this.state.response) return null;
        return { ...this.state.response, ...extra };
    }

    async exportArtifact(
        kind: ExportKind,
        extra: ExportParams,
    ): Promise<{ text: string; contentType: string } | null> {
        const payload = this.exportPayload(extra);
        if (!payload) return null;
        const outcome = await this.api.exportArtifact(kind, payload);
        if (outcome.kind === "error") {
            this.state.toast = outcome.error;
            this.onRender(this.state);
            return null;
        }
        this.state.toast = null;
        this.onRender(this.state);
        return { text: outcome.text, contentType: outcome.contentType };
    }
}
