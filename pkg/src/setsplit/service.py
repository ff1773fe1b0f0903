"""HTTP game service: play the splitting game against the engine.

JSON over HTTP, sessions in memory.  After every human move the engine
immediately answers with its own best move, so the client sees one
round-trip per ply.  Moves within one game are serialized by a per-session
lock; distinct games proceed in parallel.

API:
  POST   /games            {board|preset, first, human} -> 201 {id, ...state}
  GET    /games/{id}       -> 200 state
  POST   /games/{id}/moves {element} -> 200 state (incl. engine reply)
  GET    /games/{id}/hint  -> 200 {bestMove, winnerUnderPerfectPlay}
  DELETE /games/{id}       -> 204
Errors: 404 unknown id, 409 illegal move, 422 malformed board.
"""

from __future__ import annotations

import json
import mimetypes
import re
import secrets
import threading
import time
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .cli import _board_from_doc, board_doc
from .core import Family, elements_of
from .game import (
    GameState,
    IllegalMoveError,
    Player,
    apply_move,
    best_move,
    new_game,
    outcome,
    solve_game,
    unsplit_member,
)

SERVICE_MAX_K = 14


class ServiceError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


@dataclass
class SessionRecord:
    id: str
    state: GameState
    human: Player
    created_at: float
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_engine_move: int | None = None


def _parse_player(doc, key: str) -> Player:
    try:
        return Player(str(doc[key]).capitalize())
    except (KeyError, ValueError):
        raise ServiceError(422, f"'{key}' must be Split or Skew") from None


class GameService:
    """Session store plus the game logic the HTTP layer exposes."""

    def __init__(self, event_log: str | None = None):
        self._sessions: dict[str, SessionRecord] = {}
        self._lock = threading.Lock()
        self._event_path = event_log
        self._event_lock = threading.Lock()

    def _log(self, event: str, **payload) -> None:
        if not self._event_path:
            return
        record = {"ts": time.time(), "event": event, **payload}
        with self._event_lock:
            with open(self._event_path, "a") as fh:
                fh.write(json.dumps(record) + "\n")

    def _get(self, game_id: str) -> SessionRecord:
        with self._lock:
            rec = self._sessions.get(game_id)
        if rec is None:
            raise ServiceError(404, f"unknown game {game_id}")
        return rec

    def state_doc(self, rec: SessionRecord) -> dict:
        state = rec.state
        over = state.over
        winner = outcome(state)
        doc = {
            "id": rec.id,
            "board": board_doc(state.board),
            "first": state.first.value,
            "human": rec.human.value,
            "splitClaimed": list(elements_of(state.split_claimed)),
            "skewClaimed": list(elements_of(state.skew_claimed)),
            "toMove": None if over else state.to_move.value,
            "over": over,
            "winner": None if winner is None else winner.value,
            "engineMove": rec.last_engine_move,
        }
        if winner is Player.SKEW:
            witness = unsplit_member(state.board, state.split_claimed)
            doc["unsplitSet"] = list(elements_of(witness)) if witness is not None else None
        return doc

    def _engine_reply(self, rec: SessionRecord) -> None:
        rec.last_engine_move = None
        while not rec.state.over and rec.state.to_move is not rec.human:
            move = best_move(rec.state)
            rec.state = apply_move(rec.state, move)
            rec.last_engine_move = move

    def create(self, doc) -> dict:
        if not isinstance(doc, dict):
            raise ServiceError(422, "body must be a JSON object")
        try:
            board = _board_from_doc(doc.get("board", doc))
        except (ValueError, KeyError, TypeError) as exc:
            raise ServiceError(422, f"malformed board: {exc}") from None
        if board.k > SERVICE_MAX_K:
            raise ServiceError(422, f"board exceeds the engine cap of {SERVICE_MAX_K} elements")
        first = _parse_player(doc, "first")
        human = _parse_player(doc, "human")
        rec = SessionRecord(
            id=secrets.token_hex(8),
            state=new_game(board, first),
            human=human,
            created_at=time.time(),
        )
        self._engine_reply(rec)
        with self._lock:
            self._sessions[rec.id] = rec
        self._log("create", id=rec.id, board=board_doc(board), first=first.value, human=human.value)
        return self.state_doc(rec)

    def get(self, game_id: str) -> dict:
        return self.state_doc(self._get(game_id))

    def move(self, game_id: str, doc) -> dict:
        rec = self._get(game_id)
        if not isinstance(doc, dict) or "element" not in doc:
            raise ServiceError(422, "body must carry 'element'")
        try:
            element = int(doc["element"])
        except (TypeError, ValueError):
            raise ServiceError(422, "'element' must be an integer") from None
        with rec.lock:
            if rec.state.over:
                raise ServiceError(409, "game is over")
            if rec.state.to_move is not rec.human:
                raise ServiceError(409, "not the human player's turn")
            try:
                rec.state = apply_move(rec.state, element)
            except IllegalMoveError as exc:
                raise ServiceError(409, str(exc)) from None
            self._engine_reply(rec)
            doc = self.state_doc(rec)
        self._log("move", id=game_id, element=element, engine=rec.last_engine_move)
        return doc

    def hint(self, game_id: str) -> dict:
        rec = self._get(game_id)
        with rec.lock:
            if rec.state.over:
                raise ServiceError(409, "game is over")
            state = rec.state
            move = best_move(state)
            winner = _winner_from(state)
        return {"bestMove": move, "winnerUnderPerfectPlay": winner.value}

    def delete(self, game_id: str) -> None:
        with self._lock:
            if game_id not in self._sessions:
                raise ServiceError(404, f"unknown game {game_id}")
            del self._sessions[game_id]
        self._log("delete", id=game_id)


def _winner_from(state: GameState) -> Player:
    from .game import _Solver

    solver = _Solver(state.board)
    wins = solver.split_wins(
        state.split_claimed, state.skew_claimed, state.to_move is Player.SPLIT
    )
    return Player.SPLIT if wins else Player.SKEW


def make_handler(service: GameService, static_dir: str | None = None):
    static_root = Path(static_dir).resolve() if static_dir else None

    class Handler(BaseHTTPRequestHandler):
        def log_message(self, fmt, *args):  # quiet by default
            pass

        def _send(self, status: int, payload: dict | None, raw: bytes | None = None, ctype="application/json"):
            body = raw if raw is not None else json.dumps(payload).encode()
            self.send_response(status)
            self.send_header("Content-Type", ctype)
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.end_headers()
            if self.command != "HEAD":
                self.wfile.write(body)

        def _body(self):
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length) if length else b""
            if not raw:
                return {}
            try:
                return json.loads(raw)
            except json.JSONDecodeError:
                raise ServiceError(422, "body is not valid JSON") from None

        def _dispatch(self):
            path = self.path.split("?", 1)[0].rstrip("/") or "/"
            method = self.command
            if method == "OPTIONS":
                return self._send(204, None, raw=b"")
            if method == "POST" and path == "/games":
                return self._send(201, service.create(self._body()))
            m = re.fullmatch(r"/games/([0-9a-f]+)", path)
            if m:
                if method == "GET":
                    return self._send(200, service.get(m.group(1)))
                if method == "DELETE":
                    service.delete(m.group(1))
                    return self._send(204, None, raw=b"")
            m = re.fullmatch(r"/games/([0-9a-f]+)/moves", path)
            if m and method == "POST":
                return self._send(200, service.move(m.group(1), self._body()))
            m = re.fullmatch(r"/games/([0-9a-f]+)/hint", path)
            if m and method == "GET":
                return self._send(200, service.hint(m.group(1)))
            if method in ("GET", "HEAD") and static_root is not None:
                return self._static(path)
            raise ServiceError(404, f"no route for {method} {path}")

        def _static(self, path: str):
            rel = "index.html" if path == "/" else path.lstrip("/")
            target = (static_root / rel).resolve()
            if not str(target).startswith(str(static_root)) or not target.is_file():
                raise ServiceError(404, f"no route for GET {path}")
            ctype = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
            self._send(200, None, raw=target.read_bytes(), ctype=ctype)

        def _handle(self):
            try:
                self._dispatch()
            except ServiceError as exc:
                self._send(exc.status, {"error": exc.message})
            except Exception as exc:  # pragma: no cover - defensive
                self._send(500, {"error": f"internal error: {exc}"})

        do_GET = do_POST = do_DELETE = do_OPTIONS = do_HEAD = _handle

    return Handler


def serve(port: int, event_log: str | None = None, static_dir: str | None = None) -> None:
    service = GameService(event_log=event_log)
    server = ThreadingHTTPServer(("", port), make_handler(service, static_dir))
    print(f"setsplit service listening on :{port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:  # pragma: no cover
        pass
    finally:
        server.server_close()
