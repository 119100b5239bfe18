import { describe, expect, it } from "vitest";

import { clickableIds, fitTransform, hullOutlineOrder, toScreen } from "../src/board.js";
import type { SessionView } from "../src/view.js";

function makeView(overrides: Partial<SessionView> = {}): SessionView {
    return {
        id: "s1",
        cherries: [
            { id: 0, x: "0", y: "0", weight: "0", taken_by: null },
            { id: 1, x: "100", y: "0", weight: "0", taken_by: null },
            { id: 2, x: "100", y: "100", weight: "0", taken_by: null },
            { id: 3, x: "0", y: "100", weight: "0", taken_by: null },
            { id: 4, x: "55", y: "50", weight: "1", taken_by: null },
        ],
        extremal: [0, 1, 2, 3],
        mover: "alice",
        human_plays: "alice",
        engine: "simple-greedy",
        moves: [],
        scores: { alice: "0", bob: "0" },
        game_over: false,
        ...overrides,
    };
}

describe("fitTransform", () => {
    it("keeps every point inside the margin box", () => {
        const view = makeView();
        const t = fitTransform(view, 640, 560, 0.05);
        const margin = 0.05 * 560;
        for (const c of view.cherries) {
            const [sx, sy] = toScreen(t, Number(c.x), Number(c.y));
            expect(sx).toBeGreaterThanOrEqual(margin - 1e-6);
            expect(sx).toBeLessThanOrEqual(640 - margin + 1e-6);
            expect(sy).toBeGreaterThanOrEqual(margin - 1e-6);
            expect(sy).toBeLessThanOrEqual(560 - margin + 1e-6);
        }
    });

    it("flips the y axis so larger board y renders higher on screen", () => {
        const view = makeView();
        const t = fitTransform(view, 640, 560);
        const [, lowY] = toScreen(t, 0, 0);
        const [, highY] = toScreen(t, 0, 100);
        expect(highY).toBeLessThan(lowY);
    });

    it("preserves aspect ratio for elongated boards", () => {
        const view = makeView({
            cherries: [
                { id: 0, x: "0", y: "0", weight: "0", taken_by: null },
                { id: 1, x: "1000", y: "0", weight: "0", taken_by: null },
                { id: 2, x: "500", y: "10", weight: "1", taken_by: null },
            ],
            extremal: [0, 1, 2],
        });
        const t = fitTransform(view, 640, 560);
        const [x0] = toScreen(t, 0, 0);
        const [x1] = toScreen(t, 1000, 0);
        const [, y0] = toScreen(t, 0, 0);
        const [, y1] = toScreen(t, 0, 10);
        expect((x1 - x0) / 1000).toBeCloseTo((y0 - y1) / 10, 6);
    });
});

describe("clickableIds", () => {
    it("is exactly the server's extremal set on the human's turn", () => {
        expect(clickableIds(makeView())).toEqual(new Set([0, 1, 2, 3]));
    });

    it("is empty when it is the engine's turn", () => {
        expect(clickableIds(makeView({ mover: "bob" }))).toEqual(new Set());
    });

    it("is empty after the game is over", () => {
        expect(clickableIds(makeView({ game_over: true, mover: null }))).toEqual(
            new Set(),
        );
    });
});

describe("hullOutlineOrder", () => {
    it("returns a permutation of the extremal ids", () => {
        const order = hullOutlineOrder(makeView());
        expect([...order].sort()).toEqual([0, 1, 2, 3]);
    });

    it("walks the square in rotational order", () => {
        const order = hullOutlineOrder(makeView());
        const idx = order.indexOf(0);
        const rotated = [...order.slice(idx), ...order.slice(0, idx)];
        // either orientation of the square boundary is acceptable
        expect([
            JSON.stringify([0, 1, 2, 3]),
            JSON.stringify([0, 3, 2, 1]),
        ]).toContain(JSON.stringify(rotated));
    });
});
