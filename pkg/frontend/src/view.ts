// Wire types mirroring the session service's JSON views.  Coordinates are
// decimal strings so arbitrary precision survives transport; the UI parses
// them to floats for display only and never feeds them back into play.

export interface CherryView {
    id: number;
    x: string;
    y: string;
    weight: string;
    taken_by: string | null;
}

export interface Scores {
    alice: string;
    bob: string;
}

export interface SessionView {
    id: string;
    cherries: CherryView[];
    extremal: number[];
    mover: string | null;
    human_plays: string;
    engine: string;
    moves: number[];
    scores: Scores;
    game_over: boolean;
}

export interface HintView {
    mover: string;
    value: string;
    optimal: number[];
}

export interface CreateRequest {
    construct?: string;
    cake?: string;
    human_plays: string;
    engine: string;
}
