/**
 * Session wiring: one active game per page, all state from the service.
 *
 * Clicks are validated locally (alternation, finished game, claimed
 * cells) so stray input never leaves the page, and the service enforces
 * the same rules again server-side.
 */

import { ApiError, BoardSpec, GameClient, GameStateDoc, PlayerName } from "./api.js";
import { render } from "./render.js";
import { BoardView, deriveView } from "./view.js";

export class App {
    private client: GameClient;
    private state: GameStateDoc | null = null;
    private gridDims: number[] | null = null;
    private hint: number | null = null;
    private message = "";
    private busy = false;

    constructor(private readonly root: HTMLElement, baseUrl = "") {
        this.client = new GameClient(baseUrl);
    }

    get current(): GameStateDoc | null {
        return this.state;
    }

    get view(): BoardView | null {
        return this.state ? deriveView(this.state, this.gridDims, this.hint) : null;
    }

    async newGame(board: BoardSpec, first: PlayerName, human: PlayerName): Promise<void> {
        if (this.state) {
            await this.client.remove(this.state.id).catch(() => undefined);
        }
        this.gridDims = "preset" in board && board.preset === "grid" ? board.dims : null;
        this.hint = null;
        this.message = "";
        this.state = await this.client.createGame(board, first, human);
        this.draw();
    }

    /** Handle a cell click; never mutates anything on an invalid click. */
    async makeMove(element: number): Promise<void> {
        const state = this.state;
        if (!state || this.busy) {
            return;
        }
        if (state.over) {
            this.note("the game is over");
            return;
        }
        if (state.toMove !== state.human) {
            this.note("not your turn");
            return;
        }
        if (state.splitClaimed.includes(element) || state.skewClaimed.includes(element)) {
            this.note(`element ${element} is already claimed`);
            return;
        }
        this.busy = true;
        try {
            this.state = await this.client.move(state.id, element);
            this.hint = null;
            this.message = "";
        } catch (err) {
            this.note(err instanceof ApiError ? err.message : String(err));
        } finally {
            this.busy = false;
        }
        this.draw();
    }

    async requestHint(): Promise<number | null> {
        const state = this.state;
        if (!state || state.over) {
            this.note("no hints: the game is over");
            this.draw();
            return null;
        }
        try {
            const hint = await this.client.hint(state.id);
            this.hint = hint.bestMove;
            this.message = `hint: claim ${hint.bestMove} (perfect play: ${hint.winnerUnderPerfectPlay} wins)`;
        } catch (err) {
            this.note(err instanceof ApiError ? err.message : String(err));
        }
        this.draw();
        return this.hint;
    }

    /** Re-fetch the authoritative state (used by tests and recovery). */
    async refresh(): Promise<void> {
        if (this.state) {
            this.state = await this.client.getGame(this.state.id);
            this.draw();
        }
    }

    private note(text: string): void {
        this.message = text;
        this.draw();
    }

    private draw(): void {
        if (!this.state) {
            return;
        }
        render(this.root, this.view!, this.state, {
            onCell: (element) => void this.makeMove(element),
        }, this.message);
    }
}
