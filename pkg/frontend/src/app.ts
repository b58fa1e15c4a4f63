import { ApiClient, ApiError } from "./api.js";
import { EventRollView } from "./eventRoll.js";
import { EditMetrics, SceneDetail } from "./types.js";

/** Page controller: scene list, event-roll editing, submit, A/B playback. */
export class EditorApp {
    readonly api: ApiClient;
    readonly roll: EventRollView;
    private scene: SceneDetail | null = null;
    private latestRevisionUrl: string | null = null;
    private latestRevisionId: string | null = null;
    private playing: "original" | "revision" = "original";
    private inFlight = false;

    constructor(
        readonly doc: Document,
        baseUrl: string = "",
    ) {
        this.api = new ApiClient(baseUrl);
        this.roll = new EventRollView(this.el("roll"));
        this.roll.onPendingChange = (pending) => {
            this.el("pending-count").textContent = String(pending.length);
            (this.el("submit") as HTMLButtonElement).disabled =
                pending.length === 0 || this.inFlight;
        };
        this.el("submit").addEventListener("click", () => void this.submit());
        this.el("clear").addEventListener("click", () => this.roll.clearPending());
        this.el("stage-delete").addEventListener("click", () => this.stageSelected("delete"));
        this.el("stage-enhance").addEventListener("click", () => this.stageSelected("enhance"));
        this.el("edit-mode").addEventListener("change", () => {
            this.roll.mode = (this.el("edit-mode") as HTMLSelectElement).value as
                "delete" | "insert" | "enhance";
        });
        this.el("ab-toggle").addEventListener("click", () => this.togglePlayback());
        this.el("scene-select").addEventListener("change", () => {
            const id = (this.el("scene-select") as HTMLSelectElement).value;
            if (id) void this.loadScene(id);
        });
    }

    private el(id: string): HTMLElement {
        const node = this.doc.getElementById(id);
        if (!node) throw new Error(`missing element #${id}`);
        return node;
    }

    async start(): Promise<void> {
        const scenes = await this.api.listScenes();
        const select = this.el("scene-select") as HTMLSelectElement;
        select.innerHTML = "";
        for (const scene of scenes) {
            const option = this.doc.createElement("option");
            option.value = scene.id;
            option.textContent = `${scene.id} (${scene.duration_s.toFixed(1)}s, ${scene.n_events} events)`;
            select.appendChild(option);
        }
        if (scenes.length) await this.loadScene(scenes[0].id);
    }

    async loadScene(id: string): Promise<void> {
        const [scene, vocab] = await Promise.all([
            this.api.getScene(id),
            this.api.vocabulary(),
        ]);
        this.scene = scene;
        this.latestRevisionUrl = null;
        this.latestRevisionId = null;
        this.playing = "original";
        const lanes = [...new Set([...vocab, ...scene.events.map((e) => e.class)])];
        this.roll.load(scene, lanes);
        const picker = this.el("insert-class") as HTMLSelectElement;
        picker.innerHTML = "";
        for (const label of vocab) {
            const option = this.doc.createElement("option");
            option.value = label;
            option.textContent = label;
            picker.appendChild(option);
        }
        const audio = this.el("player") as HTMLAudioElement;
        audio.src = this.api.sceneAudioUrl(scene.id);
        this.setStatus(`loaded scene ${scene.id}`);
        this.updateAbLabel();
    }

    stageSelected(action: "delete" | "enhance"): void {
        if (!this.roll.stageOnSelected(action)) {
            this.setStatus(`select an event block first (or spans overlap)`);
        }
    }

    async submit(): Promise<void> {
        if (!this.scene || this.inFlight) return;
        const pending = this.roll.pendingEdits();
        if (!pending.length) return;
        this.inFlight = true;
        (this.el("submit") as HTMLButtonElement).disabled = true;
        try {
            const response = await this.api.submitEdits(
                this.scene.id, pending, this.latestRevisionId,
            );
            this.latestRevisionUrl = this.api.revisionAudioUrl(response.audio_url);
            this.latestRevisionId = response.revision_id;
            this.roll.clearPending();
            this.showMetrics(response.metrics);
            this.playing = "revision";
            const audio = this.el("player") as HTMLAudioElement;
            audio.src = this.latestRevisionUrl;
            this.setStatus(`revision ${response.revision_id} ready`);
        } catch (err) {
            // Pending edits survive failures so the user can retry or adjust.
            if (err instanceof ApiError) {
                this.setStatus(`edit rejected: ${err.message}`);
            } else {
                this.setStatus(`request failed: ${String(err)}`);
            }
        } finally {
            this.inFlight = false;
            (this.el("submit") as HTMLButtonElement).disabled =
                this.roll.pendingEdits().length === 0;
            this.updateAbLabel();
        }
    }

    togglePlayback(): void {
        if (!this.scene) return;
        const audio = this.el("player") as HTMLAudioElement;
        if (this.playing === "original" && this.latestRevisionUrl) {
            this.playing = "revision";
            audio.src = this.latestRevisionUrl;
        } else {
            this.playing = "original";
            audio.src = this.api.sceneAudioUrl(this.scene.id);
        }
        this.updateAbLabel();
    }

    private updateAbLabel(): void {
        this.el("ab-toggle").textContent =
            this.playing === "original" ? "playing: original" : "playing: revision";
    }

    private showMetrics(metrics: EditMetrics): void {
        const parts = [
            `edited MSD ${metrics.edited_msd?.toFixed(3) ?? "-"}`,
            `unedited MSD ${metrics.unedited_msd?.toFixed(3) ?? "-"}`,
            `change ratio ${metrics.change_ratio?.toFixed(2) ?? "-"}`,
        ];
        this.el("metrics").textContent = parts.join(" | ");
    }

    private setStatus(text: string): void {
        this.el("status").textContent = text;
    }
}

export function boot(doc: Document, baseUrl = ""): EditorApp {
    const app = new EditorApp(doc, baseUrl);
    void app.start();
    return app;
}

declare global {
    interface Window {
        sceneEditor?: EditorApp;
    }
}

if (typeof window !== "undefined" && typeof document !== "undefined" && document.getElementById("roll")) {
    window.sceneEditor = boot(document);
}
