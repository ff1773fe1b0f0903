"""CLI golden tests: every surfaced result equals its library counterpart."""

import json

import pytest

from setsplit.cli import _board_from_doc, board_doc, main
from setsplit.core import Family
from setsplit.counting import min_three_set
from setsplit.families import standard_family
from setsplit.game import Player, grid_board, solve_game


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_family_text(capsys):
    code, out, _ = run_cli(capsys, "verify-family", "--k", "8", "--standard")
    assert code == 0
    assert out.splitlines()[0] == "splitting: true"


def test_verify_family_negative(capsys):
    code, out, _ = run_cli(
        capsys, "verify-family", "--board", '{"k":2,"sets":[[1,2]]}'
    )
    assert code == 0
    assert "splitting: false" in out
    assert "unsplit subset" in out


def test_census_text_and_json(capsys):
    code, out, _ = run_cli(capsys, "census", "--sets", "3")
    assert code == 0 and out.strip() == "65/128"
    code, out, _ = run_cli(capsys, "census", "--sets", "2", "--format", "json")
    assert json.loads(out) == {"sets": 2, "total": 8, "splitWins": 7}


def test_min_arrangement_json_matches_library(capsys):
    code, out, _ = run_cli(
        capsys, "min-arrangement", "--sets", "3", "--k", "12", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    res = min_three_set(12)
    assert doc["count"] == str(res.count) == "108"
    assert doc["arrangement"]["sizes"] == list(res.arrangement.sizes)
    assert doc["matchesReferencePattern"] is True


def test_solve_game_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "solve-game",
        "--board",
        '{"k":3,"sets":[[1,2],[2,3]]}',
        "--first",
        "Skew",
        "--format",
        "json",
    )
    doc = json.loads(out)
    sol = solve_game(Family.from_sets(3, [[1, 2], [2, 3]]), Player.SKEW)
    assert doc["winner"] == sol.winner.value == "Skew"
    assert doc["bestMove"] == sol.principal == 2


def test_tictactoe(capsys):
    code, out, _ = run_cli(capsys, "tictactoe", "--m", "3", "--n", "3")
    assert code == 0
    assert "first=Split: winner Skew" in out
    assert "first=Skew: winner Split" in out


def test_pairing_preset(capsys):
    code, out, _ = run_cli(
        capsys,
        "pairing",
        "--board",
        '{"preset":"grid","dims":[2,2]}',
        "--player",
        "Skew",
        "--format",
        "json",
    )
    doc = json.loads(out)
    assert doc["pairing"] is not None


def test_enumerate_minimal_csv(capsys):
    code, out, _ = run_cli(capsys, "enumerate-minimal", "--k", "8", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0].startswith("sets,")
    assert len(lines) == 3  # header + two classes


def test_verify_lemmas(capsys):
    code, out, _ = run_cli(capsys, "verify-lemmas", "--k", "9")
    assert code == 0 and out.strip() == "violations: 0"


def test_count_splitters_roundtrip(capsys):
    code, out, _ = run_cli(
        capsys, "count-splitters", "--board", '{"k":5,"sets":[]}', "--format", "json"
    )
    assert json.loads(out)["count"] == "32"


def test_board_json_roundtrip():
    for fam in (standard_family(8), grid_board([3, 3]), Family(4, ())):
        doc = board_doc(fam)
        assert _board_from_doc(json.loads(json.dumps(doc))) == fam
    preset = {"preset": "grid", "dims": [3, 3], "diagonals": True}
    assert _board_from_doc(preset) == grid_board([3, 3], diagonals=True)


def test_errors_exit_nonzero(capsys):
    code, _, err = run_cli(capsys, "count-splitters", "--board", "{bad json")
    assert code == 1 and "error:" in err
    code, _, err = run_cli(capsys, "verify-family")
    assert code == 1 and "no board" in err
    code, _, err = run_cli(capsys, "solve-game", "--board", '{"k":3,"sets":[[1]]}', "--first", "Nobody")
    assert code == 1


def test_unknown_flag_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["census", "--sets", "2", "--frobnicate"])
    assert exc.value.code == 2
