import { describe, expect, it } from "vitest";
import {
    EditAction,
    PendingEdit,
    deserializeEdits,
    serializeEdits,
    spansOverlap,
} from "../src/types.js";

const CLASSES = ["beep", "up-chirp", "down-chirp", "noise-burst", "buzz", "click-train", "tone-pair", "am-tone", "door"];
const ACTIONS: EditAction[] = ["delete", "insert", "enhance"];

function mulberry32(seed: number) {
    return () => {
        seed |= 0;
        seed = (seed + 0x6d2b79f5) | 0;
        let t = Math.imul(seed ^ (seed >>> 15), 1 | seed);
        t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
        return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
    };
}

function randomEdits(rand: () => number): PendingEdit[] {
    const n = Math.floor(rand() * 5);
    const edits: PendingEdit[] = [];
    for (let i = 0; i < n; i++) {
        const t0 = Math.round(rand() * 1800) / 1000;
        const dur = Math.round((0.05 + rand() * 0.5) * 1000) / 1000;
        edits.push({
            action: ACTIONS[Math.floor(rand() * ACTIONS.length)],
            classLabel: CLASSES[Math.floor(rand() * CLASSES.length)],
            t0s: t0,
            t1s: t0 + dur,
        });
    }
    return edits;
}

describe("edit serialization", () => {
    it("serializes the enhance-door example to the wire schema", () => {
        const wire = serializeEdits([
            { action: "enhance", classLabel: "Door", t0s: 2.3, t1s: 2.8 },
        ]);
        expect(wire).toEqual([{ action: "enhance", class: "door", t0_s: 2.3, t1_s: 2.8 }]);
    });

    it("round-trips every UI-constructible edit list", () => {
        const rand = mulberry32(1234);
        for (let trial = 0; trial < 500; trial++) {
            const edits = randomEdits(rand);
            const back = deserializeEdits(JSON.parse(JSON.stringify(serializeEdits(edits))));
            expect(back).toEqual(edits);
        }
    });

    it("keeps span fields as plain seconds", () => {
        const wire = serializeEdits([
            { action: "delete", classLabel: "beep", t0s: 0.1, t1s: 0.4 },
        ])[0];
        expect(Object.keys(wire).sort()).toEqual(["action", "class", "t0_s", "t1_s"]);
    });
});

describe("span overlap", () => {
    it("detects overlap and respects half-open bounds", () => {
        expect(spansOverlap({ t0s: 0, t1s: 1 }, { t0s: 0.5, t1s: 2 })).toBe(true);
        expect(spansOverlap({ t0s: 0, t1s: 1 }, { t0s: 1, t1s: 2 })).toBe(false);
    });
});
