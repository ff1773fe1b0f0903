/** Page bootstrap: config form plus the single active session. */

import type { BoardSpec, PlayerName } from "./api.js";
import { App } from "./app.js";

const PRESETS: Record<string, BoardSpec> = {
    "small board {12, 23}": { k: 3, sets: [[1, 2], [2, 3]] },
    "3x3 grid": { preset: "grid", dims: [3, 3] },
    "3x3 grid + diagonals": { preset: "grid", dims: [3, 3], diagonals: true },
    "2x4 grid": { preset: "grid", dims: [2, 4] },
    "3x4 grid": { preset: "grid", dims: [3, 4] },
};

function option(select: HTMLSelectElement, value: string): void {
    const node = document.createElement("option");
    node.value = value;
    node.textContent = value;
    select.appendChild(node);
}

export function boot(root: HTMLElement, baseUrl = ""): App {
    const form = document.createElement("div");
    form.className = "config";

    const preset = document.createElement("select");
    preset.className = "preset";
    Object.keys(PRESETS).forEach((name) => option(preset, name));

    const side = document.createElement("select");
    side.className = "side";
    ["Split", "Skew"].forEach((name) => option(side, name));

    const first = document.createElement("select");
    first.className = "first";
    ["Split", "Skew"].forEach((name) => option(first, name));

    const start = document.createElement("button");
    start.className = "start";
    start.textContent = "new game";

    const hintBtn = document.createElement("button");
    hintBtn.className = "hint-button";
    hintBtn.textContent = "hint";

    for (const [label, node] of [
        ["board", preset],
        ["you play", side],
        ["first move", first],
    ] as const) {
        const wrap = document.createElement("label");
        wrap.textContent = label + " ";
        wrap.appendChild(node);
        form.appendChild(wrap);
    }
    form.appendChild(start);
    form.appendChild(hintBtn);

    const boardRoot = document.createElement("div");
    boardRoot.className = "game-root";
    root.appendChild(form);
    root.appendChild(boardRoot);

    const app = new App(boardRoot, baseUrl);
    start.addEventListener("click", () => {
        void app.newGame(
            PRESETS[preset.value],
            first.value as PlayerName,
            side.value as PlayerName,
        );
    });
    hintBtn.addEventListener("click", () => void app.requestHint());
    return app;
}

if (typeof document !== "undefined" && document.getElementById("setsplit-app")) {
    boot(document.getElementById("setsplit-app")!);
}
