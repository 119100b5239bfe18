// App wiring: renders the server's view into an SVG board and forwards
// clicks.  Zero game logic on this side -- the UI only disables what the
// server did not list as extremal, and the server re-enforces anyway.

import { ApiError, Client } from "./api.js";
import { clickableIds, fitTransform, hullOutlineOrder, screenPoints } from "./board.js";
import type { SessionView } from "./view.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const BOARD_W = 640;
const BOARD_H = 560;
const DOT_R = 11;

export class App {
    private view: SessionView | null = null;
    private hintIds: Set<number> = new Set();
    private busy = false;

    constructor(
        private readonly doc: Document,
        private readonly client: Client,
    ) {}

    get currentView(): SessionView | null {
        return this.view;
    }

    get inFlight(): boolean {
        return this.busy;
    }

    clickableNow(): Set<number> {
        return this.view ? clickableIds(this.view) : new Set();
    }

    async newGame(construct: string, humanPlays: string, engine: string): Promise<void> {
        await this.guard(async () => {
            this.view = await this.client.createSession({
                construct,
                human_plays: humanPlays,
                engine,
            });
            this.hintIds = new Set();
            this.banner("");
            this.render();
        });
    }

    async clickCherry(id: number): Promise<void> {
        if (this.busy || !this.view) {
            return;
        }
        if (!this.clickableNow().has(id)) {
            return; // dimmed dot: no request is sent
        }
        await this.guard(async () => {
            try {
                this.view = await this.client.postMove(this.view!.id, id);
                this.hintIds = new Set();
                this.banner("");
            } catch (err) {
                if (err instanceof ApiError && err.status === 409) {
                    this.shake(err.message);
                    return;
                }
                throw err;
            }
            this.render();
        });
    }

    async showHint(): Promise<void> {
        if (this.busy || !this.view || this.view.game_over) {
            return;
        }
        await this.guard(async () => {
            try {
                const hint = await this.client.hint(this.view!.id);
                this.hintIds = new Set(hint.optimal);
                this.banner(`game value ${hint.value} for ${hint.mover}`);
            } catch (err) {
                if (err instanceof ApiError && err.status === 422) {
                    this.banner(err.message);
                    return;
                }
                throw err;
            }
            this.render();
        });
    }

    private async guard(work: () => Promise<void>): Promise<void> {
        this.busy = true;
        this.setControlsDisabled(true);
        try {
            await work();
        } catch (err) {
            this.banner(err instanceof Error ? err.message : String(err));
        } finally {
            this.busy = false;
            this.setControlsDisabled(false);
        }
    }

    private byId(id: string): HTMLElement | null {
        return this.doc.getElementById(id);
    }

    private banner(text: string): void {
        const el = this.byId("banner");
        if (el) {
            el.textContent = text;
            el.classList.toggle("hidden", text === "");
        }
    }

    private shake(message: string): void {
        const board = this.byId("board");
        if (board) {
            board.classList.remove("shake");
            // force a reflow so the animation restarts
            void (board as unknown as { offsetWidth: number }).offsetWidth;
            board.classList.add("shake");
        }
        this.banner(message);
    }

    private setControlsDisabled(disabled: boolean): void {
        for (const id of ["new-game", "hint"]) {
            const el = this.byId(id) as HTMLButtonElement | null;
            if (el) {
                el.disabled = disabled;
            }
        }
    }

    render(): void {
        const view = this.view;
        const board = this.byId("board");
        if (!view || !board) {
            return;
        }
        const t = fitTransform(view, BOARD_W, BOARD_H);
        const pts = new Map(screenPoints(view, t).map((p) => [p.id, p]));
        const clickable = this.clickableNow();
        const lastMoves = new Set(view.moves.slice(-2));

        const svg = this.doc.createElementNS(SVG_NS, "svg");
        svg.setAttribute("viewBox", `0 0 ${BOARD_W} ${BOARD_H}`);
        svg.setAttribute("width", String(BOARD_W));
        svg.setAttribute("height", String(BOARD_H));

        // hull outline through the extremal cherries, for orientation
        const outline = hullOutlineOrder(view);
        if (outline.length >= 2) {
            const poly = this.doc.createElementNS(SVG_NS, "polygon");
            poly.setAttribute(
                "points",
                outline.map((id) => `${pts.get(id)!.sx},${pts.get(id)!.sy}`).join(" "),
            );
            poly.setAttribute("class", "hull");
            svg.appendChild(poly);
        }

        for (const cherry of view.cherries) {
            const p = pts.get(cherry.id)!;
            const g = this.doc.createElementNS(SVG_NS, "g");
            const dot = this.doc.createElementNS(SVG_NS, "circle");
            dot.setAttribute("cx", String(p.sx));
            dot.setAttribute("cy", String(p.sy));
            dot.setAttribute("r", String(DOT_R));
            const classes = ["cherry", cherry.weight === "0" ? "green" : "red"];
            if (cherry.taken_by) {
                classes.push("taken");
            }
            if (clickable.has(cherry.id)) {
                classes.push("clickable");
            }
            if (this.hintIds.has(cherry.id)) {
                classes.push("hint");
            }
            if (lastMoves.has(cherry.id)) {
                classes.push("just-moved");
            }
            dot.setAttribute("class", classes.join(" "));
            dot.setAttribute("data-id", String(cherry.id));
            dot.addEventListener("click", () => {
                void this.clickCherry(cherry.id);
            });
            g.appendChild(dot);
            if (cherry.taken_by) {
                const label = this.doc.createElementNS(SVG_NS, "text");
                label.setAttribute("x", String(p.sx));
                label.setAttribute("y", String(p.sy + 4));
                label.setAttribute("class", "taken-label");
                label.textContent = cherry.taken_by === "alice" ? "A" : "B";
                g.appendChild(label);
            }
            svg.appendChild(g);
        }

        board.replaceChildren(svg);

        const scores = this.byId("scores");
        if (scores) {
            scores.textContent = `alice ${view.scores.alice} : bob ${view.scores.bob}`;
        }
        const status = this.byId("status");
        if (status) {
            status.textContent = view.game_over
                ? "game over"
                : view.mover === view.human_plays
                  ? "your turn"
                  : `${view.mover} (engine) to move`;
        }
    }
}

export function setupApp(doc: Document, client: Client): App {
    const app = new App(doc, client);
    const newGame = doc.getElementById("new-game");
    if (newGame) {
        newGame.addEventListener("click", () => {
            const construct = (doc.getElementById("construct") as HTMLSelectElement).value;
            const side = (doc.getElementById("side") as HTMLSelectElement).value;
            const engine = (doc.getElementById("engine") as HTMLSelectElement).value;
            void app.newGame(construct, side, engine);
        });
    }
    const hint = doc.getElementById("hint");
    if (hint) {
        hint.addEventListener("click", () => {
            void app.showHint();
        });
    }
    return app;
}
