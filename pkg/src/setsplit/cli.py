"""Command-line surface: verification, counting, solving, and the service.

Boards are given as JSON, either inline (--board) or from a file
(--sets-file): {"k": 3, "sets": [[1,2],[2,3]]} or the grid preset
{"preset": "grid", "dims": [3,3], "diagonals": false}.  Exact counts are
serialized as decimal strings so arbitrary precision survives JSON.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import counting, families, game
from .core import Arrangement2, CapacityError, Family, RegionVector, elements_of
from .game import Player


def _board_from_doc(doc) -> Family:
    if not isinstance(doc, dict):
        raise ValueError("board document must be a JSON object")
    if doc.get("preset") == "grid":
        return game.grid_board(doc["dims"], bool(doc.get("diagonals", False)))
    if "k" not in doc or "sets" not in doc:
        raise ValueError("board needs 'k' and 'sets' (or a 'preset')")
    return Family.from_sets(int(doc["k"]), doc["sets"])


def _load_board(args) -> Family:
    if getattr(args, "board", None):
        return _board_from_doc(json.loads(args.board))
    if getattr(args, "sets_file", None):
        with open(args.sets_file) as fh:
            return _board_from_doc(json.load(fh))
    if getattr(args, "standard", False) or getattr(args, "k", None) is not None:
        return families.standard_family(args.k)
    raise ValueError("no board given: use --board, --sets-file, or --k/--standard")


def board_doc(family: Family) -> dict:
    return {"k": family.k, "sets": [list(e) for e in family.member_elements()]}


def _emit(args, rows: list[dict], text_lines: list[str]) -> None:
    if args.format == "json":
        payload = rows[0] if len(rows) == 1 else rows
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        keys: list[str] = []
        for row in rows:
            for key in row:
                if key not in keys:
                    keys.append(key)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=keys)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _flat(v) for k, v in row.items()})
        sys.stdout.write(buf.getvalue())
    else:
        for line in text_lines:
            print(line)


def _flat(v):
    return json.dumps(v) if isinstance(v, (list, dict)) else v


def _cmd_verify_family(args) -> None:
    fam = _load_board(args)
    bad = families.find_unsplit_subset(fam)
    row = {"board": board_doc(fam), "splitting": bad is None}
    lines = [f"splitting: {str(bad is None).lower()}"]
    if bad is not None:
        row["unsplitSubset"] = list(elements_of(bad))
        lines.append(f"unsplit subset: {list(elements_of(bad))}")
    _emit(args, [row], lines)


def _cmd_enumerate_minimal(args) -> None:
    classes = families.enumerate_minimal_splitting_families(args.k)
    rows = [
        {
            "sets": board_doc(c.canonical)["sets"],
            "size": c.size,
            "uniform": c.uniform,
            "standardEquivalent": c.standard_equivalent,
        }
        for c in classes
    ]
    lines = [f"{len(classes)} equivalence classes of size {(args.k + 1) // 2} on k={args.k}"]
    for i, r in enumerate(rows, 1):
        lines.append(
            f"  [{i}] sets={r['sets']} uniform={r['uniform']} standard={r['standardEquivalent']}"
        )
    _emit(args, rows, lines)


def _cmd_hamming(args) -> None:
    fam = _load_board(args)
    rep = families.hamming_representation(fam)
    witness = families.find_forbidden_y(rep)
    row = {
        "columns": [list(elements_of(c)) for c in rep.columns],
        "edges": [list(e) for e in rep.edges()],
        "connected": families.is_connected(rep),
        "forbiddenY": None
        if witness is None
        else {"kind": witness.kind, "vertices": [list(elements_of(v)) for v in witness.vertices]},
    }
    lines = [
        f"columns (as member-index sets): {row['columns']}",
        f"distance-1 edges: {row['edges']}",
        f"connected: {str(row['connected']).lower()}",
        f"forbidden Y: {row['forbiddenY'] if witness else 'none'}",
    ]
    _emit(args, [row], lines)


def _cmd_count_splitters(args) -> None:
    fam = _load_board(args)
    n = counting.count_splitters(fam)
    _emit(args, [{"board": board_doc(fam), "count": str(n)}], [f"splitters: {n}"])


def _rv_doc(rv: RegionVector) -> dict:
    return {"n": rv.n, "sizes": list(rv.sizes)}


def _cmd_min_arrangement(args) -> None:
    if args.sets == 1:
        res = counting.min_one_set(args.k)
    elif args.sets == 2:
        res = counting.min_two_set(args.k)
    else:
        if not args.long and args.k > 16:
            raise CapacityError("k > 16 for 3 sets requires --long")
        res = counting.min_three_set(args.k)
    row = {
        "sets": args.sets,
        "k": args.k,
        "count": str(res.count),
        "arrangement": _rv_doc(res.arrangement),
        "allMinimizers": [_rv_doc(r) for r in res.all_minimizers],
    }
    lines = [
        f"minimum splitters for {args.sets}-set families on k={args.k}: {res.count}",
        f"arrangement (region sizes, bitmask-indexed): {list(res.arrangement.sizes)}",
        f"minimizers: {[list(r.sizes) for r in res.all_minimizers]}",
    ]
    if res.matches_reference is not None:
        row["matchesReferencePattern"] = res.matches_reference
        lines.append(f"matches reference pattern: {str(res.matches_reference).lower()}")
    _emit(args, [row], lines)


def _cmd_verify_lemmas(args) -> None:
    bad = counting.verify_point_moving_lemmas(args.k)
    rows = [
        {
            "lemma": v.lemma,
            "arrangement": list(v.arrangement),
            "comparedTo": list(v.compared_to),
            "count": str(v.count),
            "comparedCount": str(v.compared_count),
        }
        for v in bad
    ]
    lines = [f"violations: {len(bad)}"] + [
        f"  {v.lemma}: {v.arrangement} -> {v.compared_to} ({v.count} vs {v.compared_count})"
        for v in bad
    ]
    _emit(args, rows or [{"k": args.k, "violations": 0}], lines)


def _parse_player(name: str) -> Player:
    try:
        return Player(name.capitalize())
    except ValueError:
        raise ValueError("player must be Split or Skew") from None


def _cmd_solve_game(args) -> None:
    fam = _load_board(args)
    first = _parse_player(args.first)
    sol = game.solve_game(fam, first)
    row = {
        "board": board_doc(fam),
        "first": first.value,
        "winner": sol.winner.value,
        "bestMove": sol.principal,
    }
    lines = [f"winner: {sol.winner.value}"]
    if sol.principal is not None:
        lines.append(f"best first move: {sol.principal}")
    _emit(args, [row], lines)


def _cmd_pairing(args) -> None:
    fam = _load_board(args)
    player = _parse_player(args.player)
    pairing = game.find_pairing_strategy(fam, player)
    row = {
        "board": board_doc(fam),
        "player": player.value,
        "pairing": None if pairing is None else [list(p) for p in pairing.pairs],
    }
    lines = [
        f"pairing for {player.value}: "
        + ("none" if pairing is None else str([list(p) for p in pairing.pairs]))
    ]
    _emit(args, [row], lines)


def _cmd_census(args) -> None:
    res = game.census(args.sets)
    row = {"sets": args.sets, "total": res.total, "splitWins": res.split_wins}
    _emit(args, [row], [f"{res.split_wins}/{res.total}"])


def _cmd_tictactoe(args) -> None:
    fam = game.grid_board([args.m, args.n], args.diagonals)
    max_k = 16 if args.long else game.SOLVE_MAX_K
    w_split = game.solve_game(fam, Player.SPLIT, max_k=max_k).winner
    w_skew = game.solve_game(fam, Player.SKEW, max_k=max_k).winner
    row = {
        "dims": [args.m, args.n],
        "diagonals": args.diagonals,
        "winnerWhenSplitFirst": w_split.value,
        "winnerWhenSkewFirst": w_skew.value,
    }
    lines = [
        f"first=Split: winner {w_split.value}",
        f"first=Skew: winner {w_skew.value}",
    ]
    _emit(args, [row], lines)


def _cmd_serve(args) -> None:
    from .service import serve

    serve(args.port, event_log=args.event_log, static_dir=args.static)


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        **({"default": d} if suppress else {"default": "text"}),
    )
    parser.add_argument(
        "--long",
        action="store_true",
        help="enable heavy opt-in searches",
        **({"default": d} if suppress else {}),
    )
    parser.add_argument(
        "--threads",
        type=int,
        help="accepted for compatibility; searches currently run single-process",
        **({"default": d} if suppress else {"default": 1}),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="setsplit",
        description="Exact combinatorics and perfect-play solving for set splitting.",
    )
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cmd(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    def board_args(p, with_k_standard=True):
        p.add_argument("--board", help="inline board JSON")
        p.add_argument("--sets-file", help="path to board JSON")
        if with_k_standard:
            p.add_argument("--k", type=int, help="ground-set size (standard family)")
            p.add_argument("--standard", action="store_true", help="use the standard family on k")

    p = add_cmd("verify-family", help="check the splitting property")
    board_args(p)
    p.set_defaults(func=_cmd_verify_family)

    p = add_cmd("enumerate-minimal", help="census of minimum-size splitting families")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_enumerate_minimal)

    p = add_cmd("hamming", help="incidence-column structure of a family")
    board_args(p)
    p.set_defaults(func=_cmd_hamming)

    p = add_cmd("count-splitters", help="exact splitter count of a family")
    board_args(p)
    p.set_defaults(func=_cmd_count_splitters)

    p = add_cmd("min-arrangement", help="minimum-splitter arrangements")
    p.add_argument("--sets", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_min_arrangement)

    p = add_cmd("verify-lemmas", help="exhaustive point-moving checks at total k")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_verify_lemmas)

    p = add_cmd("solve-game", help="perfect-play winner of the splitting game")
    board_args(p)
    p.add_argument("--first", required=True, help="Split or Skew")
    p.set_defaults(func=_cmd_solve_game)

    p = add_cmd("pairing", help="search a pairing strategy")
    board_args(p)
    p.add_argument("--player", required=True, help="Split or Skew")
    p.set_defaults(func=_cmd_pairing)

    p = add_cmd("census", help="who wins each reduced n-set board")
    p.add_argument("--sets", type=int, choices=(2, 3), required=True)
    p.set_defaults(func=_cmd_census)

    p = add_cmd("tictactoe", help="solve the m x n rows/columns game")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--diagonals", action="store_true")
    p.set_defaults(func=_cmd_tictactoe)

    p = add_cmd("serve", help="run the HTTP game service")
    p.add_argument("--port", type=int, required=True)
    p.add_argument("--event-log", help="append-only JSON-lines event log")
    p.add_argument("--static", help="directory of static files to serve at /")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
