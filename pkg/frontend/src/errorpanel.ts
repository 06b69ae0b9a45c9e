import { ErrorReport } from "./types.js";

// The error panel shows the service's numbers verbatim: full-precision
// string conversion, no rounding or fixed-point truncation, so what the
// designer reads is exactly what the service reported.

export interface ErrorPanelRow {
    variant: string;
    m: number;
    value: string;
    averaged: string;
}

export function errorPanelRows(reports: ErrorReport[]): ErrorPanelRow[] {
    const byVariant = new Map<string, ErrorPanelRow>();
    for (const report of reports) {
        let row = byVariant.get(report.variant);
        if (!row) {
            row = { variant: report.variant, m: report.m, value: "", averaged: "" };
            byVariant.set(report.variant, row);
        }
        if (report.averaged) {
            row.averaged = String(report.value);
        } else {
            row.value = String(report.value);
        }
    }
    return Array.from(byVariant.values());
}
