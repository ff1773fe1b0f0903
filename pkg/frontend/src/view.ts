/**
 * Pure view model derived from a service state document.
 *
 * Nothing here talks to the network or guesses at game logic beyond the
 * split-window arithmetic needed for per-set progress badges; ownership
 * and outcomes always mirror the server state exactly.
 */

import type { GameStateDoc, PlayerName } from "./api.js";

export type Owner = "none" | "human" | "engine";

export type Layout =
    | { kind: "venn" }
    | { kind: "grid"; rows: number; cols: number }
    | { kind: "list" };

export interface SetStatus {
    /** 1-based index of the board set. */
    index: number;
    size: number;
    claimedBySplit: number;
    claimedBySkew: number;
    /** Split can still land |A & set| inside the split window. */
    achievable: boolean;
    /** Defined once the game is over: did Split's set split this one? */
    split: boolean | null;
}

export interface BoardView {
    layout: Layout;
    /** owner per element, index 1..k (index 0 unused). */
    cells: Owner[];
    perSet: SetStatus[];
    /** element -> bitmask of the member sets containing it. */
    regionOf: number[];
    toMove: PlayerName | null;
    humanTurn: boolean;
    over: boolean;
    winner: PlayerName | null;
    humanWon: boolean | null;
    unsplitSet: number[] | null;
    hint: number | null;
}

export function splitWindow(size: number): [number, number] {
    return [Math.floor(size / 2), Math.ceil(size / 2)];
}

export function pickLayout(state: GameStateDoc, gridDims: number[] | null): Layout {
    if (gridDims && gridDims.length === 2) {
        return { kind: "grid", rows: gridDims[0], cols: gridDims[1] };
    }
    if (state.board.sets.length <= 3) {
        return { kind: "venn" };
    }
    return { kind: "list" };
}

function setStatus(
    index: number,
    set: number[],
    split: Set<number>,
    skew: Set<number>,
    over: boolean,
): SetStatus {
    const size = set.length;
    const [lo, hi] = splitWindow(size);
    const claimedBySplit = set.filter((e) => split.has(e)).length;
    const claimedBySkew = set.filter((e) => skew.has(e)).length;
    const open = size - claimedBySplit - claimedBySkew;
    const achievable = claimedBySplit <= hi && claimedBySplit + open >= lo;
    const isSplit = over ? claimedBySplit >= lo && claimedBySplit <= hi : null;
    return { index, size, claimedBySplit, claimedBySkew, achievable, split: isSplit };
}

export function deriveView(
    state: GameStateDoc,
    gridDims: number[] | null,
    hint: number | null = null,
): BoardView {
    const split = new Set(state.splitClaimed);
    const skew = new Set(state.skewClaimed);
    const humanIsSplit = state.human === "Split";
    const cells: Owner[] = new Array(state.board.k + 1).fill("none");
    for (let e = 1; e <= state.board.k; e++) {
        if (split.has(e)) {
            cells[e] = humanIsSplit ? "human" : "engine";
        } else if (skew.has(e)) {
            cells[e] = humanIsSplit ? "engine" : "human";
        }
    }
    const regionOf: number[] = new Array(state.board.k + 1).fill(0);
    state.board.sets.forEach((set, i) => {
        for (const e of set) {
            regionOf[e] |= 1 << i;
        }
    });
    return {
        layout: pickLayout(state, gridDims),
        cells,
        perSet: state.board.sets.map((set, i) =>
            setStatus(i + 1, set, split, skew, state.over),
        ),
        regionOf,
        toMove: state.toMove,
        humanTurn: !state.over && state.toMove === state.human,
        over: state.over,
        winner: state.winner,
        humanWon: state.winner === null ? null : state.winner === state.human,
        unsplitSet: state.unsplitSet ?? null,
        hint,
    };
}

/** Region label like "A·B" or "outside" from a membership bitmask. */
export function regionLabel(mask: number, n: number): string {
    if (mask === 0) {
        return "outside";
    }
    const names = [];
    for (let i = 0; i < n; i++) {
        if (mask >> i & 1) {
            names.push(String.fromCharCode(65 + i));
        }
    }
    return names.join("·");
}
