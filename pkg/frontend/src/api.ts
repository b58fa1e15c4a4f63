import {
    EditResponse,
    PendingEdit,
    SceneDetail,
    SceneSummary,
    serializeEdits,
} from "./types.js";

export class ApiError extends Error {
    constructor(readonly status: number, detail: string) {
        super(`HTTP ${status}: ${detail}`);
    }
}

async function reject(response: Response): Promise<never> {
    let detail = response.statusText;
    try {
        const body = await response.json();
        if (body && body.detail) detail = String(body.detail);
    } catch {
        // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, detail);
}

export class ApiClient {
    constructor(readonly baseUrl: string = "") {}

    private async getJson<T>(path: string): Promise<T> {
        const response = await fetch(this.baseUrl + path);
        if (!response.ok) await reject(response);
        return response.json() as Promise<T>;
    }

    listScenes(): Promise<SceneSummary[]> {
        return this.getJson("/scenes");
    }

    getScene(id: string): Promise<SceneDetail> {
        return this.getJson(`/scenes/${id}`);
    }

    async vocabulary(): Promise<string[]> {
        const body = await this.getJson<{ labels: string[] }>("/vocabulary");
        return body.labels;
    }

    sceneAudioUrl(id: string): string {
        return `${this.baseUrl}/scenes/${id}/audio`;
    }

    revisionAudioUrl(path: string): string {
        return this.baseUrl + path;
    }

    async submitEdits(
        sceneId: string,
        edits: PendingEdit[],
        parentRevision: string | null = null,
    ): Promise<EditResponse> {
        const body: Record<string, unknown> = { edits: serializeEdits(edits) };
        if (parentRevision) body.parent_revision = parentRevision;
        const response = await fetch(`${this.baseUrl}/scenes/${sceneId}/edits`, {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify(body),
        });
        if (!response.ok) await reject(response);
        return response.json() as Promise<EditResponse>;
    }
}
