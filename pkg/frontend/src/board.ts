// Pure board math: viewport fitting and derived display sets.  No game
// rules live here -- legality, scores and extremality all come from the
// server view verbatim.

import type { SessionView } from "./view.js";

export interface Transform {
    scale: number;
    offsetX: number;
    offsetY: number;
    height: number;
}

export interface ScreenPoint {
    id: number;
    sx: number;
    sy: number;
}

// Map the cake's bounding box onto a width x height viewport with a
// fractional margin, preserving aspect ratio.  Coordinates arrive as
// decimal strings; float parsing here is display-only precision loss.
export function fitTransform(
    view: SessionView,
    width: number,
    height: number,
    marginFrac = 0.05,
): Transform {
    const xs = view.cherries.map((c) => Number(c.x));
    const ys = view.cherries.map((c) => Number(c.y));
    const minX = Math.min(...xs);
    const maxX = Math.max(...xs);
    const minY = Math.min(...ys);
    const maxY = Math.max(...ys);
    const spanX = Math.max(maxX - minX, 1e-9);
    const spanY = Math.max(maxY - minY, 1e-9);
    const margin = marginFrac * Math.min(width, height);
    const scale = Math.min(
        (width - 2 * margin) / spanX,
        (height - 2 * margin) / spanY,
    );
    // center the drawing in both axes
    const offsetX = (width - scale * spanX) / 2 - scale * minX;
    const offsetY = (height - scale * spanY) / 2 - scale * minY;
    return { scale, offsetX, offsetY, height };
}

// Screen y grows downward; the board keeps mathematical orientation.
export function toScreen(t: Transform, x: number, y: number): [number, number] {
    return [t.scale * x + t.offsetX, t.height - (t.scale * y + t.offsetY)];
}

export function screenPoints(view: SessionView, t: Transform): ScreenPoint[] {
    return view.cherries.map((c) => {
        const [sx, sy] = toScreen(t, Number(c.x), Number(c.y));
        return { id: c.id, sx, sy };
    });
}

// The dots a human may click right now: exactly the server's extremal
// ids, and only on the human's turn of a live game.
export function clickableIds(view: SessionView): Set<number> {
    if (view.game_over || view.mover !== view.human_plays) {
        return new Set();
    }
    return new Set(view.extremal);
}

// Order the extremal cherries by angle around their centroid so the hull
// outline can be drawn as a polygon.  Display-only use of coordinates.
export function hullOutlineOrder(view: SessionView): number[] {
    const ext = view.cherries.filter((c) => view.extremal.includes(c.id));
    if (ext.length === 0) {
        return [];
    }
    const cx = ext.reduce((a, c) => a + Number(c.x), 0) / ext.length;
    const cy = ext.reduce((a, c) => a + Number(c.y), 0) / ext.length;
    return ext
        .map((c) => ({ id: c.id, angle: Math.atan2(Number(c.y) - cy, Number(c.x) - cx) }))
        .sort((a, b) => a.angle - b.angle)
        .map((c) => c.id);
}
