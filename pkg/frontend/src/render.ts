import { Viewport } from "./geometry.js";
import { StudioState } from "./controller.js";
import { Pair } from "./types.js";

// Colors keyed by provenance so added/moved/kept knots read at a glance.
const PROVENANCE_FILL: Record<string, string> = {
    original: "#1d1d1f",
    added: "#c8960c",
    moved: "#d06a28",
    kept: "#8e8e93",
};
const CURVE = "#0a53a8";
const COMPARE = "#9aa0a6";
const HILLTOP = "#c8960c";

export function drawScene(
    ctx: CanvasRenderingContext2D,
    view: Viewport,
    state: StudioState,
    width: number,
    height: number,
): void {
    ctx.clearRect(0, 0, width, height);
    drawGrid(ctx, view, width, height);

    if (state.compareEnabled && state.compare) {
        drawPolyline(ctx, view, state.compare.samples, COMPARE, 1.5, [6, 4]);
    }
    const doc = state.response;
    if (doc) {
        drawPolyline(ctx, view, doc.samples, CURVE, 2, []);
        doc.transformed_nodes.forEach((node, i) => {
            const tag = doc.provenance[i] ?? "original";
            drawDot(ctx, view, node, PROVENANCE_FILL[tag] ?? "#1d1d1f", tag === "original" ? 5 : 4);
        });
        for (const top of doc.hilltops) {
            drawHollowDot(ctx, view, top, HILLTOP, 6);
        }
    } else {
        // No response yet: show the editable nodes so there is something to grab.
        for (const node of state.store.doc.nodes) {
            drawDot(ctx, view, node, "#1d1d1f", 5);
        }
    }
}

function drawGrid(
    ctx: CanvasRenderingContext2D,
    view: Viewport,
    width: number,
    height: number,
): void {
    const topLeft = view.toData(0, 0);
    const bottomRight = view.toData(width, height);
    const span = Math.max(bottomRight.x - topLeft.x, topLeft.y - bottomRight.y);
    const step = niceStep(span / 8);
    ctx.save();
    ctx.strokeStyle = "#e8e8ed";
    ctx.lineWidth = 1;
    ctx.fillStyle = "#b0b0b6";
    ctx.font = "10px system-ui, sans-serif";
    for (let x = Math.ceil(topLeft.x / step) * step; x <= bottomRight.x; x += step) {
        const { px } = view.toPixel(x, 0);
        ctx.beginPath();
        ctx.moveTo(px, 0);
        ctx.lineTo(px, height);
        ctx.stroke();
        ctx.fillText(label(x), px + 2, height - 4);
    }
    for (let y = Math.ceil(bottomRight.y / step) * step; y <= topLeft.y; y += step) {
        const { py } = view.toPixel(0, y);
        ctx.beginPath();
        ctx.moveTo(0, py);
        ctx.lineTo(width, py);
        ctx.stroke();
        ctx.fillText(label(y), 4, py - 2);
    }
    ctx.restore();
}

function niceStep(raw: number): number {
    const power = Math.pow(10, Math.floor(Math.log10(Math.max(raw, 1e-12))));
    const unit = raw / power;
    const factor = unit >= 5 ? 5 : unit >= 2 ? 2 : 1;
    return factor * power;
}

function label(v: number): string {
    return Math.abs(v) < 1e-12 ? "0" : String(Number(v.toPrecision(6)));
}

function drawPolyline(
    ctx: CanvasRenderingContext2D,
    view: Viewport,
    points: Pair[],
    color: string,
    widthPx: number,
    dash: number[],
): void {
    if (points.length < 2) return;
    ctx.save();
    ctx.strokeStyle = color;
    ctx.lineWidth = widthPx;
    ctx.setLineDash(dash);
    ctx.beginPath();
    points.forEach(([x, y], i) => {
        const { px, py } = view.toPixel(x, y);
        if (i === 0) ctx.moveTo(px, py);
        else ctx.lineTo(px, py);
    });
    ctx.stroke();
    ctx.restore();
}

function drawDot(
    ctx: CanvasRenderingContext2D,
    view: Viewport,
    point: Pair | { x: number; y: number },
    color: string,
    radius: number,
): void {
    const [x, y] = Array.isArray(point) ? point : [point.x, point.y];
    const { px, py } = view.toPixel(x, y);
    ctx.save();
    ctx.fillStyle = color;
    ctx.beginPath();
    ctx.arc(px, py, radius, 0, 2 * Math.PI);
    ctx.fill();
    ctx.restore();
}

function drawHollowDot(
    ctx: CanvasRenderingContext2D,
    view: Viewport,
    point: Pair,
    color: string,
    radius: number,
): void {
    const { px, py } = view.toPixel(point[0], point[1]);
    ctx.save();
    ctx.strokeStyle = color;
    ctx.lineWidth = 2;
    ctx.beginPath();
    ctx.arc(px, py, radius, 0, 2 * Math.PI);
    ctx.stroke();
    ctx.restore();
}
