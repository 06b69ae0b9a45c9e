// Data <-> pixel mapping and drag constraints.
//
// The viewport is isotropic by construction: a single scale factor serves
// both axes, so one data unit always maps to the same pixel length
// horizontally and vertically, at every zoom level (equal-unit plotting).

export interface Bounds {
    minX: number;
    minY: number;
    maxX: number;
    maxY: number;
}

export class Viewport {
    scale = 1; // pixels per data unit, shared by both axes
    originX = 0; // data coordinates of the pixel-space origin
    originY = 0; // (y axis points up in data space, down in pixel space)

    toPixel(x: number, y: number): { px: number; py: number } {
        return { px: (x - this.originX) * this.scale, py: (this.originY - y) * this.scale };
    }

    toData(px: number, py: number): { x: number; y: number } {
        return { x: this.originX + px / this.scale, y: this.originY - py / this.scale };
    }

    fit(bounds: Bounds, widthPx: number, heightPx: number, padPx = 40): void {
        const w = Math.max(bounds.maxX - bounds.minX, 1e-9);
        const h = Math.max(bounds.maxY - bounds.minY, 1e-9);
        const usableW = Math.max(widthPx - 2 * padPx, 1);
        const usableH = Math.max(heightPx - 2 * padPx, 1);
        this.scale = Math.min(usableW / w, usableH / h);
        const cx = (bounds.minX + bounds.maxX) / 2;
        const cy = (bounds.minY + bounds.maxY) / 2;
        this.originX = cx - widthPx / 2 / this.scale;
        this.originY = cy + heightPx / 2 / this.scale;
    }

    zoomAt(px: number, py: number, factor: number): void {
        const anchor = this.toData(px, py);
        this.scale *= factor;
        this.originX = anchor.x - px / this.scale;
        this.originY = anchor.y + py / this.scale;
    }

    panBy(dpx: number, dpy: number): void {
        this.originX -= dpx / this.scale;
        this.originY += dpy / this.scale;
    }
}

// Smallest abscissa gap the editor allows between neighbouring nodes; keeps
// every request comfortably inside the service's strict-monotonicity rule.
export function minNodeGap(x: number): number {
    return 1e-6 * Math.max(1, Math.abs(x));
}

/**
 * Clamp a dragged node's abscissa strictly between its neighbours.
 * Returns the admissible x (the input when it is already admissible).
 */
export function clampDragX(xs: number[], index: number, desired: number): number {
    let lo = -Infinity;
    let hi = Infinity;
    if (index > 0) {
        const left = xs[index - 1];
        lo = left + minNodeGap(left);
    }
    if (index < xs.length - 1) {
        const right = xs[index + 1];
        hi = right - minNodeGap(right);
    }
    return Math.min(Math.max(desired, lo), hi);
}

export function strictlyIncreasing(xs: number[]): boolean {
    for (let i = 1; i < xs.length; i++) {
        if (xs[i] <= xs[i - 1]) return false;
    }
    return true;
}
