// @vitest-environment jsdom
// End-to-end editing flow against a live service; set SERVICE_URL to enable.
// The python suite starts a service with a trained checkpoint and runs this
// file via `npm run test:integration`.
import { describe, expect, it } from "vitest";
import { ApiClient } from "../src/api.js";
import { EventRollView } from "../src/eventRoll.js";

const SERVICE_URL = process.env.SERVICE_URL ?? "";

function mouse(type: string, x: number): MouseEvent {
    return new MouseEvent(type, { clientX: x, clientY: 5, bubbles: true });
}

describe.skipIf(!SERVICE_URL)("live service editing flow", () => {
    it("loads a scene, drag-stages a delete, submits, and localizes the change", async () => {
        const api = new ApiClient(SERVICE_URL);
        const scenes = await api.listScenes();
        expect(scenes.length).toBeGreaterThan(0);

        const detail = await api.getScene(scenes[0].id);
        const vocab = await api.vocabulary();
        document.body.innerHTML = "<div id='host'></div>";
        const view = new EventRollView(document.getElementById("host")!, {
            pixelsPerSecond: 160,
        });
        const lanes = [...new Set([...vocab, ...detail.events.map((e) => e.class)])];
        view.load(detail, lanes);

        // Drag-select a delete over the first vocabulary-class event.
        const target = detail.events.find((e) => vocab.includes(e.class));
        expect(target).toBeDefined();
        view.mode = "delete";
        const track = view.root.querySelector<HTMLElement>(
            `[data-class='${target!.class}']`,
        )!;
        track.dispatchEvent(mouse("mousedown", target!.t0_s * 160));
        document.dispatchEvent(mouse("mousemove", target!.t1_s * 160));
        document.dispatchEvent(mouse("mouseup", target!.t1_s * 160));
        const pending = view.pendingEdits();
        expect(pending.length).toBe(1);
        expect(pending[0].action).toBe("delete");
        expect(pending[0].classLabel).toBe(target!.class);

        const response = await api.submitEdits(detail.id, pending);
        expect(response.revision_id).toMatch(/^r\d+/);
        expect(response.per_edit[0].status).toBe("applied");

        // Change concentrated in the edited region: ratio above 1.
        expect(response.metrics.change_ratio).not.toBeNull();
        expect(response.metrics.change_ratio!).toBeGreaterThan(1.0);

        const audio = await fetch(SERVICE_URL + response.audio_url);
        expect(audio.status).toBe(200);
        const bytes = await audio.arrayBuffer();
        expect(bytes.byteLength).toBeGreaterThan(44);
    }, 120_000);
});
