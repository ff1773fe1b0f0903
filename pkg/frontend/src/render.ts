/**
 * DOM rendering.  The whole board area is rebuilt from the view model on
 * every change; handlers are attached to the fresh nodes each time.
 */

import type { GameStateDoc } from "./api.js";
import { BoardView, regionLabel } from "./view.js";

export interface Handlers {
    onCell(element: number): void;
}

function el(tag: string, className: string, text = ""): HTMLElement {
    const node = document.createElement(tag);
    node.className = className;
    if (text) {
        node.textContent = text;
    }
    return node;
}

function cellButton(element: number, view: BoardView, handlers: Handlers): HTMLElement {
    const owner = view.cells[element];
    const btn = el("button", `cell owner-${owner}`, String(element));
    btn.dataset.element = String(element);
    if (view.hint === element) {
        btn.classList.add("hint");
    }
    btn.addEventListener("click", () => handlers.onCell(element));
    return btn;
}

function renderGrid(view: BoardView, handlers: Handlers, rows: number, cols: number): HTMLElement {
    const board = el("div", "board grid-board");
    board.style.gridTemplateColumns = `repeat(${cols}, 3em)`;
    for (let e = 1; e <= rows * cols; e++) {
        board.appendChild(cellButton(e, view, handlers));
    }
    return board;
}

function renderRegions(view: BoardView, handlers: Handlers, venn: boolean): HTMLElement {
    const n = view.perSet.length;
    const board = el("div", venn ? "board venn-board" : "board list-board");
    const groups = new Map<number, HTMLElement>();
    for (let e = 1; e < view.cells.length; e++) {
        const mask = view.regionOf[e];
        let group = groups.get(mask);
        if (!group) {
            group = el("div", "region");
            group.dataset.region = String(mask);
            group.appendChild(el("span", "region-label", regionLabel(mask, n)));
            groups.set(mask, group);
        }
        group.appendChild(cellButton(e, view, handlers));
    }
    for (const mask of [...groups.keys()].sort((a, b) => a - b)) {
        board.appendChild(groups.get(mask)!);
    }
    return board;
}

function renderStatus(view: BoardView, state: GameStateDoc): HTMLElement {
    const bar = el("div", "status");
    if (view.over) {
        const won = view.humanWon ? "you win" : "engine wins";
        const banner = el("div", `banner winner-${view.winner!.toLowerCase()}`,
            `${view.winner} wins — ${won}`);
        bar.appendChild(banner);
        if (view.winner === "Skew" && view.unsplitSet) {
            bar.appendChild(el("div", "unsplit",
                `unsplit set: {${view.unsplitSet.join(", ")}}`));
        }
    } else {
        const turn = view.humanTurn ? "your move" : "engine thinking";
        bar.appendChild(el("div", "turn", `${view.toMove} to move — ${turn}`));
    }
    bar.appendChild(el("div", "roles",
        `you play ${state.human}; ${state.first} moved first`));
    return bar;
}

function renderPerSet(view: BoardView): HTMLElement {
    const table = el("div", "set-status");
    for (const s of view.perSet) {
        const row = el("div", "set-status-row");
        row.dataset.set = String(s.index);
        row.dataset.achievable = String(s.achievable);
        let badge: string;
        if (s.split === true) {
            badge = "split";
        } else if (s.split === false) {
            badge = "skewed";
        } else {
            badge = s.achievable ? "open" : "lost";
        }
        row.textContent =
            `set ${s.index}: ${s.claimedBySplit}/${s.size} to Split, ` +
            `${s.claimedBySkew} to Skew — ${badge}`;
        row.classList.add(`badge-${badge}`);
        table.appendChild(row);
    }
    return table;
}

export function render(
    root: HTMLElement,
    view: BoardView,
    state: GameStateDoc,
    handlers: Handlers,
    message: string,
): void {
    root.textContent = "";
    root.appendChild(renderStatus(view, state));
    if (view.layout.kind === "grid") {
        root.appendChild(renderGrid(view, handlers, view.layout.rows, view.layout.cols));
    } else {
        root.appendChild(renderRegions(view, handlers, view.layout.kind === "venn"));
    }
    root.appendChild(renderPerSet(view));
    const note = el("div", "message", message);
    note.setAttribute("role", "status");
    root.appendChild(note);
}
