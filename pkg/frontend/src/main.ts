import { ApiClient } from "./api.js";
import { StudioController, StudioState } from "./controller.js";
import { errorPanelRows } from "./errorpanel.js";
import { Viewport } from "./geometry.js";
import { PRESETS } from "./presets.js";
import { drawScene } from "./render.js";
import { ExportKind, Method } from "./types.js";

const qs = <T extends HTMLElement>(sel: string): T => {
    const el = document.querySelector(sel);
    if (!el) throw new Error(`missing element ${sel}`);
    return el as T;
};

const canvas = qs<HTMLCanvasElement>("#canvas");
const ctx = canvas.getContext("2d")!;
const view = new Viewport();

const baseUrlInput = qs<HTMLInputElement>("#base-url");
baseUrlInput.value = localStorage.getItem("goldinterp.baseUrl") ?? "http://127.0.0.1:8350";

let api = new ApiClient(baseUrlInput.value);
let controller = new StudioController(api, render);

function render(state: StudioState): void {
    drawScene(ctx, view, state, canvas.width, canvas.height);
    renderErrorPanel(state);
    renderKeepMask(state);
    const toast = qs<HTMLDivElement>("#toast");
    if (state.toast) {
        toast.textContent = `${state.toast.code}: ${state.toast.detail}`;
        toast.classList.add("visible");
    } else {
        toast.classList.remove("visible");
    }
    qs<HTMLSpanElement>("#busy").style.visibility = state.busy ? "visible" : "hidden";
}

function renderErrorPanel(state: StudioState): void {
    const tbody = qs<HTMLTableSectionElement>("#error-rows");
    tbody.innerHTML = "";
    if (!state.response) return;
    for (const row of errorPanelRows(state.response.error_reports)) {
        const tr = document.createElement("tr");
        for (const cell of [row.variant, row.value, row.averaged]) {
            const td = document.createElement("td");
            td.textContent = cell;
            tr.appendChild(td);
        }
        tbody.appendChild(tr);
    }
}

function renderKeepMask(state: StudioState): void {
    const box = qs<HTMLDivElement>("#keep-mask");
    box.innerHTML = "";
    if (state.store.doc.method !== "golden_ext_curve" || !state.response) return;
    const n = state.store.doc.nodes.length - 1;
    const mask = state.store.doc.params.keep_mask ?? new Array<boolean>(n).fill(true);
    for (let i = 0; i < n; i++) {
        const labelEl = document.createElement("label");
        const check = document.createElement("input");
        check.type = "checkbox";
        check.checked = mask[i] ?? true;
        check.addEventListener("change", () => controller.keepMaskToggled(i));
        labelEl.appendChild(check);
        labelEl.appendChild(document.createTextNode(` interval ${i}`));
        box.appendChild(labelEl);
    }
}

function fitToData(): void {
    const pts =
        controller.state.response?.samples ?? controller.state.store.doc.nodes;
    const xs = pts.map((p) => p[0]);
    const ys = pts.map((p) => p[1]);
    view.fit(
        {
            minX: Math.min(...xs),
            minY: Math.min(...ys),
            maxX: Math.max(...xs),
            maxY: Math.max(...ys),
        },
        canvas.width,
        canvas.height,
    );
}

// --- toolbar -----------------------------------------------------------

const presetBox = qs<HTMLDivElement>("#presets");
for (const preset of Object.values(PRESETS)) {
    const button = document.createElement("button");
    button.textContent = preset.label;
    button.addEventListener("click", async () => {
        syncParamInputs(preset.params.side, preset.params.L, preset.params.q, preset.k0);
        (qs<HTMLSelectElement>("#method")).value = preset.method;
        await controller.loadPreset(preset);
        fitToData();
        render(controller.state);
        const axisInput = qs<HTMLInputElement>("#axis");
        if (preset.axis) axisInput.value = preset.axis.join(",");
        const mirrorInput = qs<HTMLInputElement>("#mirror");
        mirrorInput.value = preset.mirrorAbout !== undefined ? String(preset.mirrorAbout) : "";
    });
    presetBox.appendChild(button);
}

function syncParamInputs(
    side?: string,
    L?: number,
    q?: number,
    k0?: number | null,
): void {
    if (side) qs<HTMLSelectElement>("#side").value = side;
    qs<HTMLInputElement>("#param-L").value = L !== undefined ? String(L) : "1";
    qs<HTMLInputElement>("#param-q").value = q !== undefined ? String(q) : "0.2";
    qs<HTMLInputElement>("#param-k0").value = k0 !== undefined && k0 !== null ? String(k0) : "";
}

qs<HTMLSelectElement>("#method").addEventListener("change", (ev) => {
    controller.methodChanged((ev.target as HTMLSelectElement).value as Method);
});
qs<HTMLSelectElement>("#side").addEventListener("change", (ev) => {
    controller.paramChanged("side", (ev.target as HTMLSelectElement).value as "left" | "right");
});
qs<HTMLInputElement>("#param-L").addEventListener("change", (ev) => {
    controller.paramChanged("L", Number((ev.target as HTMLInputElement).value));
});
qs<HTMLInputElement>("#param-q").addEventListener("change", (ev) => {
    controller.paramChanged("q", Number((ev.target as HTMLInputElement).value));
});
qs<HTMLInputElement>("#param-k0").addEventListener("change", (ev) => {
    const raw = (ev.target as HTMLInputElement).value.trim();
    controller.k0Changed(raw === "" ? null : Number(raw));
});
qs<HTMLInputElement>("#param-m").addEventListener("change", (ev) => {
    controller.mChanged(Math.max(2, Number((ev.target as HTMLInputElement).value) || 2));
});
qs<HTMLInputElement>("#compare").addEventListener("change", (ev) => {
    void controller.compareToggled((ev.target as HTMLInputElement).checked);
});
qs<HTMLButtonElement>("#undo").addEventListener("click", () => controller.undo());
qs<HTMLButtonElement>("#fit").addEventListener("click", () => {
    fitToData();
    render(controller.state);
});

baseUrlInput.addEventListener("change", () => {
    localStorage.setItem("goldinterp.baseUrl", baseUrlInput.value);
    api = new ApiClient(baseUrlInput.value);
    controller = new StudioController(api, render);
});

// --- canvas interaction --------------------------------------------------

let dragIndex: number | null = null;

function nodeAt(px: number, py: number): number | null {
    const nodes = controller.state.store.doc.nodes;
    for (let i = 0; i < nodes.length; i++) {
        const p = view.toPixel(nodes[i][0], nodes[i][1]);
        if (Math.hypot(p.px - px, p.py - py) <= 8) return i;
    }
    return null;
}

canvas.addEventListener("mousedown", (ev) => {
    dragIndex = nodeAt(ev.offsetX, ev.offsetY);
    if (dragIndex !== null) controller.dragStarted();
});
canvas.addEventListener("mousemove", (ev) => {
    if (dragIndex === null) return;
    const { x, y } = view.toData(ev.offsetX, ev.offsetY);
    controller.nodeDragged(dragIndex, x, y);
});
window.addEventListener("mouseup", () => {
    dragIndex = null;
});
canvas.addEventListener("dblclick", (ev) => {
    const { x, y } = view.toData(ev.offsetX, ev.offsetY);
    const hit = nodeAt(ev.offsetX, ev.offsetY);
    if (hit !== null) controller.nodeDeleted(hit);
    else controller.nodeAdded(x, y);
});
canvas.addEventListener("wheel", (ev) => {
    ev.preventDefault();
    view.zoomAt(ev.offsetX, ev.offsetY, ev.deltaY < 0 ? 1.1 : 1 / 1.1);
    render(controller.state);
});

// --- exports ---------------------------------------------------------------

function parseAxis(): [number, number, number] | undefined {
    const raw = qs<HTMLInputElement>("#axis").value.trim();
    if (!raw) return undefined;
    const parts = raw.split(",").map(Number);
    return parts.length === 3 && parts.every(Number.isFinite)
        ? (parts as [number, number, number])
        : undefined;
}

function parseMirror(): number | undefined {
    const raw = qs<HTMLInputElement>("#mirror").value.trim();
    return raw === "" ? undefined : Number(raw);
}

async function download(kind: ExportKind): Promise<void> {
    const extra =
        kind === "obj"
            ? { axis: parseAxis(), segments: 64 }
            : { mirror_about: parseMirror() };
    if (kind === "obj" && !extra.axis) {
        controller.state.toast = { code: "INVALID_PARAM", detail: "axis a,b,c required for OBJ" };
        render(controller.state);
        return;
    }
    const artifact = await controller.exportArtifact(kind, extra);
    if (!artifact) return;
    const blob = new Blob([artifact.text], { type: artifact.contentType });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = `design.${kind}`;
    link.click();
    URL.revokeObjectURL(link.href);
}

qs<HTMLButtonElement>("#export-svg").addEventListener("click", () => void download("svg"));
qs<HTMLButtonElement>("#export-csv").addEventListener("click", () => void download("csv"));
qs<HTMLButtonElement>("#export-obj").addEventListener("click", () => void download("obj"));

// --- boot -----------------------------------------------------------------

fitToData();
void controller.refresh().then(() => {
    fitToData();
    render(controller.state);
});
