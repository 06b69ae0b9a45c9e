import { clampDragX } from "./geometry.js";
import { Preset } from "./presets.js";
import { Method, MethodParams, Pair } from "./types.js";

export interface DesignDoc {
    nodes: Pair[];
    method: Method;
    k0: number | null;
    params: MethodParams;
    m: number;
    sampleCount: number;
}

function cloneDoc(doc: DesignDoc): DesignDoc {
    return {
        ...doc,
        nodes: doc.nodes.map((p) => [p[0], p[1]] as Pair),
        params: { ...doc.params, keep_mask: doc.params.keep_mask?.slice() },
    };
}

const DEFAULT_DOC: DesignDoc = {
    nodes: [
        [0, 0],
        [5, 4],
        [10, 2],
    ],
    method: "linear",
    k0: null,
    params: {},
    m: 2,
    sampleCount: 200,
};

/**
 * The editable design document plus a linear undo stack.  Mutators enforce
 * the strictly-increasing-x invariant, so a request built from this store
 * can never carry a degenerate node sequence.
 */
export class DocumentStore {
    doc: DesignDoc = cloneDoc(DEFAULT_DOC);
    private undoStack: DesignDoc[] = [];

    private push(): void {
        this.undoStack.push(cloneDoc(this.doc));
        if (this.undoStack.length > 200) this.undoStack.shift();
    }

    /** Record an undo point explicitly (called once at drag start). */
    snapshot(): void {
        this.push();
    }

    undo(): boolean {
        const prev = this.undoStack.pop();
        if (!prev) return false;
        this.doc = prev;
        return true;
    }

    loadPreset(preset: Preset): void {
        this.push();
        this.doc = {
            nodes: preset.nodes.map((p) => [p[0], p[1]] as Pair),
            method: preset.method,
            k0: preset.k0,
            params: { ...preset.params },
            m: this.doc.m,
            sampleCount: Math.max(this.doc.sampleCount, 200),
        };
    }

    /**
     * Move a node; the abscissa is clamped strictly between its neighbours.
     * Returns true when the node actually changed.
     */
    moveNode(index: number, x: number, y: number, snapshot = false): boolean {
        const xs = this.doc.nodes.map((p) => p[0]);
        const clamped = clampDragX(xs, index, x);
        const node = this.doc.nodes[index];
        if (node[0] === clamped && node[1] === y) return false;
        if (snapshot) this.push();
        this.doc.nodes[index] = [clamped, y];
        return true;
    }

    addNode(x: number, y: number): number {
        this.push();
        const nodes = this.doc.nodes;
        let index = nodes.findIndex((p) => p[0] >= x);
        if (index === -1) index = nodes.length;
        nodes.splice(index, 0, [x, y]);
        const clamped = clampDragX(nodes.map((p) => p[0]), index, x);
        nodes[index] = [clamped, y];
        this.invalidateMask();
        return index;
    }

    deleteNode(index: number): boolean {
        if (this.doc.nodes.length <= 2) return false; // the service needs two
        this.push();
        this.doc.nodes.splice(index, 1);
        this.invalidateMask();
        return true;
    }

    setMethod(method: Method): void {
        this.push();
        this.doc.method = method;
        this.invalidateMask();
    }

    setK0(k0: number | null): void {
        this.push();
        this.doc.k0 = k0;
    }

    setParam<K extends keyof MethodParams>(key: K, value: MethodParams[K]): void {
        this.push();
        this.doc.params = { ...this.doc.params, [key]: value };
    }

    setM(m: number): void {
        this.doc.m = m;
    }

    setSampleCount(count: number): void {
        this.doc.sampleCount = count;
    }

    /** Toggle whether interval i keeps its inserted curve knot. */
    toggleKeepMask(interval: number): void {
        this.push();
        const n = this.doc.nodes.length - 1;
        const mask = this.doc.params.keep_mask?.slice() ?? new Array<boolean>(n).fill(true);
        if (interval < 0 || interval >= n) return;
        mask[interval] = !mask[interval];
        this.doc.params = { ...this.doc.params, keep_mask: mask };
    }

    // Interval count changes invalidate any per-interval mask.
    private invalidateMask(): void {
        if (this.doc.params.keep_mask) {
            const { keep_mask, ...rest } = this.doc.params;
            this.doc.params = rest;
        }
    }
}
