import { EditAction, PendingEdit, SceneDetail, SceneEvent, spansOverlap } from "./types.js";

export interface EventRollOptions {
    pixelsPerSecond?: number;
    laneHeight?: number;
}

const CROWDED_THRESHOLD = 20;
const MIN_DRAG_SECONDS = 0.05;

interface EventBlock {
    event: SceneEvent;
    el: HTMLElement;
}

interface DragState {
    classLabel: string;
    track: HTMLElement;
    startX: number;
    ghost: HTMLElement;
}

/** Timeline editor: one lane per class, blocks proportional to time,
 *  click-select for delete/enhance, drag on empty lane space to insert. */
export class EventRollView {
    readonly root: HTMLElement;
    readonly pps: number;
    readonly laneHeight: number;

    private scene: SceneDetail | null = null;
    private classes: string[] = [];
    private tracks = new Map<string, HTMLElement>();
    private blocks: EventBlock[] = [];
    private pending: PendingEdit[] = [];
    private selected: EventBlock | null = null;
    private drag: DragState | null = null;
    mode: EditAction = "insert";

    onPendingChange: (pending: PendingEdit[]) => void = () => {};

    constructor(container: HTMLElement, opts: EventRollOptions = {}) {
        this.pps = opts.pixelsPerSecond ?? 160;
        this.laneHeight = opts.laneHeight ?? 26;
        this.root = document.createElement("div");
        this.root.className = "event-roll";
        container.appendChild(this.root);
        document.addEventListener("mousemove", (e) => this.onDragMove(e));
        document.addEventListener("mouseup", (e) => this.onDragEnd(e));
    }

    load(scene: SceneDetail, classes: string[]): void {
        this.scene = scene;
        this.classes = classes;
        this.pending = [];
        this.selected = null;
        this.render();
        this.onPendingChange(this.pending);
    }

    pendingEdits(): PendingEdit[] {
        return [...this.pending];
    }

    selectedEvent(): SceneEvent | null {
        return this.selected ? this.selected.event : null;
    }

    timeToX(t: number): number {
        return t * this.pps;
    }

    xToTime(x: number): number {
        if (!this.scene) return 0;
        return Math.min(Math.max(x / this.pps, 0), this.scene.duration_s);
    }

    /** Stage one edit; refuses overlaps with already-staged edits. */
    stage(edit: PendingEdit): boolean {
        if (!this.scene) return false;
        if (edit.t1s <= edit.t0s) return false;
        if (edit.t0s < 0 || edit.t1s > this.scene.duration_s + 1e-9) return false;
        if (this.pending.some((p) => spansOverlap(p, edit))) return false;
        this.pending.push(edit);
        this.render();
        this.onPendingChange(this.pending);
        return true;
    }

    stageOnSelected(action: EditAction): boolean {
        if (!this.selected) return false;
        const ev = this.selected.event;
        return this.stage({ action, classLabel: ev.class, t0s: ev.t0_s, t1s: ev.t1_s });
    }

    stageInsert(classLabel: string, t0s: number, t1s: number): boolean {
        return this.stage({ action: "insert", classLabel, t0s, t1s });
    }

    clearPending(): void {
        this.pending = [];
        this.render();
        this.onPendingChange(this.pending);
    }

    private render(): void {
        this.root.innerHTML = "";
        this.tracks.clear();
        this.blocks = [];
        if (!this.scene) return;
        const scene = this.scene;
        const nEvents = scene.events.length;
        this.root.classList.toggle("crowded", nEvents > CROWDED_THRESHOLD);
        const width = Math.ceil(this.timeToX(scene.duration_s));
        for (const classLabel of this.classes) {
            const lane = document.createElement("div");
            lane.className = "lane";
            const label = document.createElement("div");
            label.className = "lane-label";
            label.textContent = classLabel;
            const track = document.createElement("div");
            track.className = "lane-track";
            track.dataset.class = classLabel;
            track.dataset.insertable = "true";
            track.title = `drag to insert ${classLabel}`;
            track.style.width = `${width}px`;
            track.style.height = `${this.laneHeight}px`;
            track.addEventListener("mousedown", (e) => this.onDragStart(e, classLabel, track));
            lane.appendChild(label);
            lane.appendChild(track);
            this.root.appendChild(lane);
            this.tracks.set(classLabel, track);
        }
        for (const event of scene.events) {
            const track = this.tracks.get(event.class);
            if (!track) continue;
            const el = document.createElement("div");
            el.className = "event-block";
            el.style.left = `${this.timeToX(event.t0_s)}px`;
            el.style.width = `${this.timeToX(event.t1_s - event.t0_s)}px`;
            el.textContent = event.class;
            const block = { event, el };
            el.addEventListener("mousedown", (e) => {
                e.stopPropagation();
                this.select(block);
            });
            track.appendChild(el);
            this.blocks.push(block);
        }
        for (const edit of this.pending) {
            const track = this.tracks.get(edit.classLabel);
            if (!track) continue;
            const el = document.createElement("div");
            el.className = `pending-edit pending-${edit.action}`;
            el.style.left = `${this.timeToX(edit.t0s)}px`;
            el.style.width = `${this.timeToX(edit.t1s - edit.t0s)}px`;
            el.textContent = edit.action;
            track.appendChild(el);
            for (const block of this.blocks) {
                const ev = block.event;
                if (ev.class === edit.classLabel && ev.t0_s < edit.t1s && edit.t0s < ev.t1_s) {
                    block.el.classList.add(`pending-${edit.action}`);
                }
            }
        }
        if (this.selected) {
            const match = this.blocks.find(
                (b) =>
                    b.event.class === this.selected!.event.class &&
                    b.event.t0_s === this.selected!.event.t0_s,
            );
            this.selected = match ?? null;
            if (match) match.el.classList.add("selected");
        }
    }

    private select(block: EventBlock): void {
        for (const b of this.blocks) b.el.classList.remove("selected");
        this.selected = block;
        block.el.classList.add("selected");
    }

    private onDragStart(e: MouseEvent, classLabel: string, track: HTMLElement): void {
        if (e.target !== track) return;
        const startX = e.clientX - track.getBoundingClientRect().left;
        const ghost = document.createElement("div");
        ghost.className = `pending-edit pending-${this.mode} ghost`;
        ghost.style.left = `${startX}px`;
        ghost.style.width = "0px";
        track.appendChild(ghost);
        this.drag = { classLabel, track, startX, ghost };
        e.preventDefault();
    }

    private onDragMove(e: MouseEvent): void {
        if (!this.drag) return;
        const x = e.clientX - this.drag.track.getBoundingClientRect().left;
        const left = Math.min(this.drag.startX, x);
        this.drag.ghost.style.left = `${left}px`;
        this.drag.ghost.style.width = `${Math.abs(x - this.drag.startX)}px`;
    }

    private onDragEnd(e: MouseEvent): void {
        if (!this.drag) return;
        const drag = this.drag;
        this.drag = null;
        drag.ghost.remove();
        const endX = e.clientX - drag.track.getBoundingClientRect().left;
        const t0 = this.xToTime(Math.min(drag.startX, endX));
        const t1 = this.xToTime(Math.max(drag.startX, endX));
        if (t1 - t0 >= MIN_DRAG_SECONDS) {
            this.stage({ action: this.mode, classLabel: drag.classLabel, t0s: t0, t1s: t1 });
        }
    }
}
