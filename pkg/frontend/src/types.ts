export type EditAction = "delete" | "insert" | "enhance";

export interface PendingEdit {
    action: EditAction;
    classLabel: string;
    t0s: number;
    t1s: number;
}

export interface SceneEvent {
    class: string;
    t0_s: number;
    t1_s: number;
}

export interface SceneSummary {
    id: string;
    duration_s: number;
    n_events: number;
}

export interface SceneDetail {
    id: string;
    duration_s: number;
    sample_rate_hz: number;
    events: SceneEvent[];
}

export interface WireEdit {
    action: EditAction;
    class: string;
    t0_s: number;
    t1_s: number;
}

export interface EditMetrics {
    edited_msd: number | null;
    unedited_msd: number | null;
    edited_kld?: number | null;
    unedited_kld?: number | null;
    change_ratio: number | null;
    n_edited_frames: number;
    n_unedited_frames: number;
}

export interface EditResponse {
    revision_id: string;
    parent_id: string | null;
    audio_url: string;
    per_edit: { action: string; class: string; status: string }[];
    metrics: EditMetrics;
}

/** Wire form: lower-case class names, span fields in seconds. */
export function serializeEdits(edits: PendingEdit[]): WireEdit[] {
    return edits.map((e) => ({
        action: e.action,
        class: e.classLabel.toLowerCase(),
        t0_s: e.t0s,
        t1_s: e.t1s,
    }));
}

export function deserializeEdits(wire: WireEdit[]): PendingEdit[] {
    return wire.map((w) => ({
        action: w.action,
        classLabel: w.class,
        t0s: w.t0_s,
        t1s: w.t1_s,
    }));
}

export function spansOverlap(a: { t0s: number; t1s: number }, b: { t0s: number; t1s: number }): boolean {
    return a.t0s < b.t1s && b.t0s < a.t1s;
}
