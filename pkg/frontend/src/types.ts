// Wire types of the /v1 JSON API. The studio does no numerics of its own:
// every displayed curve point and error value comes from these payloads.

export type Method =
    | "step"
    | "linear"
    | "quadratic"
    | "golden_ext_step"
    | "golden_eq_step"
    | "golden_ext_linear"
    | "golden_eq_linear"
    | "golden_ext_curve";

export type Side = "left" | "right";

export type Pair = [number, number];

export interface MethodParams {
    L?: number;
    q?: number;
    side?: Side;
    keep_mask?: boolean[];
}

export interface InterpolateRequest {
    method: Method;
    nodes: Pair[];
    k0?: number | null;
    params?: MethodParams;
    sample_count?: number;
}

export interface ErrorReport {
    variant: string;
    m: number;
    form: string;
    averaged: boolean;
    value: number;
    count: number;
    ratios: number[];
    targets: number[];
}

export interface InterpolateResponse {
    method: Method;
    params: MethodParams;
    k0: number | null;
    samples: Pair[];
    transformed_nodes: Pair[];
    provenance: string[];
    hilltops: Pair[];
    accepted: boolean[] | null;
    degenerate: number[];
    revised_intervals: number[];
    error_reports: ErrorReport[];
}

export interface ApiError {
    code: string;
    detail: string;
}

export type ExportKind = "svg" | "csv" | "obj";

export interface ExportParams {
    axis?: [number, number, number];
    segments?: number;
    mirror_about?: number;
}
