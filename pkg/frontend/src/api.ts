/**
 * Typed client for the splitting-game HTTP service.
 *
 * All mutation goes through sequential calls here; the view layer renders
 * exclusively from the state documents the service returns.
 */

export type PlayerName = "Split" | "Skew";

export interface BoardDoc {
    k: number;
    sets: number[][];
}

export type BoardSpec =
    | BoardDoc
    | { preset: "grid"; dims: number[]; diagonals?: boolean };

export interface GameStateDoc {
    id: string;
    board: BoardDoc;
    first: PlayerName;
    human: PlayerName;
    splitClaimed: number[];
    skewClaimed: number[];
    toMove: PlayerName | null;
    over: boolean;
    winner: PlayerName | null;
    engineMove: number | null;
    unsplitSet?: number[] | null;
}

export interface HintDoc {
    bestMove: number;
    winnerUnderPerfectPlay: PlayerName;
}

export class ApiError extends Error {
    constructor(readonly status: number, message: string) {
        super(message);
    }
}

async function decode(resp: Response): Promise<any> {
    const text = await resp.text();
    const body = text ? JSON.parse(text) : null;
    if (!resp.ok) {
        throw new ApiError(resp.status, body?.error ?? resp.statusText);
    }
    return body;
}

export class GameClient {
    constructor(private readonly baseUrl: string = "") {}

    private url(path: string): string {
        return this.baseUrl + path;
    }

    async createGame(
        board: BoardSpec,
        first: PlayerName,
        human: PlayerName,
    ): Promise<GameStateDoc> {
        const resp = await fetch(this.url("/games"), {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify({ board, first, human }),
        });
        return decode(resp);
    }

    async getGame(id: string): Promise<GameStateDoc> {
        return decode(await fetch(this.url(`/games/${id}`)));
    }

    async move(id: string, element: number): Promise<GameStateDoc> {
        const resp = await fetch(this.url(`/games/${id}/moves`), {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify({ element }),
        });
        return decode(resp);
    }

    async hint(id: string): Promise<HintDoc> {
        return decode(await fetch(this.url(`/games/${id}/hint`)));
    }

    async remove(id: string): Promise<void> {
        const resp = await fetch(this.url(`/games/${id}`), { method: "DELETE" });
        if (!resp.ok && resp.status !== 404) {
            throw new ApiError(resp.status, "delete failed");
        }
    }
}
