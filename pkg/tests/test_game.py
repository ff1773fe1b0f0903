"""The splitting game: rules, solver, pairings, census, and named boards."""

import itertools
import random

import pytest

from setsplit.core import Family, RegionVector, family_from_regions, mask_of, splits
from setsplit.game import (
    IllegalMoveError,
    Pairing,
    Player,
    apply_move,
    best_move,
    census,
    cyclic_board,
    find_pairing_strategy,
    grid_board,
    legal_moves,
    new_game,
    outcome,
    reduce_board,
    solve_game,
    validate_pairing,
)

B_SMALL = Family.from_sets(3, [[1, 2], [2, 3]])


def _naive_winner(board, first):
    """Unmemoized game-tree oracle."""
    full = board.full_mask

    def play(split, skew, split_mv):
        open_mask = full & ~(split | skew)
        if not open_mask:
            won = all(splits(split, m) for m in board.sets)
            return Player.SPLIT if won else Player.SKEW
        mover = Player.SPLIT if split_mv else Player.SKEW
        moves = open_mask
        while moves:
            bit = moves & -moves
            moves ^= bit
            child = (
                play(split | bit, skew, False) if split_mv else play(split, skew | bit, True)
            )
            if child is mover:
                return mover
        return mover.opponent

    return play(0, 0, first is Player.SPLIT)


# ---------------------------------------------------------------------------
# rules


def test_move_application():
    state = new_game(B_SMALL, Player.SKEW)
    state = apply_move(state, 2)
    assert state.skew_claimed == mask_of([2])
    assert state.to_move is Player.SPLIT
    assert legal_moves(state) == (1, 3)
    with pytest.raises(IllegalMoveError):
        apply_move(state, 2)


def test_outcome_full_board():
    state = new_game(B_SMALL, Player.SKEW)
    for move in (1, 2, 3):  # skew takes 1 and 3, split takes 2
        state = apply_move(state, move)
    assert state.split_claimed == mask_of([2])
    assert outcome(state) is Player.SPLIT
    with pytest.raises(IllegalMoveError):
        apply_move(state, 1)


def test_outcome_only_at_end():
    state = new_game(B_SMALL, Player.SPLIT)
    assert outcome(state) is None
    assert not state.over


def test_alternation_invariant():
    with pytest.raises(ValueError):
        # first=Split cannot be behind in claims
        type(new_game(B_SMALL, Player.SPLIT))(B_SMALL, 0, mask_of([1]), Player.SPLIT)


# ---------------------------------------------------------------------------
# solver


def test_small_board_skew_wins_both_ways():
    assert solve_game(B_SMALL, Player.SKEW).winner is Player.SKEW
    assert solve_game(B_SMALL, Player.SPLIT).winner is Player.SKEW
    assert solve_game(B_SMALL, Player.SKEW).principal == 2


def test_empty_family_split_wins():
    for k in (0, 3, 6):
        for first in Player:
            assert solve_game(Family(k, ()), first).winner is Player.SPLIT


def test_solver_matches_naive_tree():
    rng = random.Random(7)
    for _ in range(150):
        k = rng.randint(0, 6)
        n = rng.randint(0, 4)
        board = Family(k, tuple(rng.randrange(1 << k) for _ in range(n)))
        for first in Player:
            assert solve_game(board, first).winner is _naive_winner(board, first)


def test_principal_preserves_win():
    rng = random.Random(19)
    for _ in range(80):
        k = rng.randint(1, 6)
        board = Family(k, tuple(rng.randrange(1 << k) for _ in range(rng.randint(1, 3))))
        for first in Player:
            sol = solve_game(board, first)
            if sol.principal is None:
                continue
            after = apply_move(new_game(board, first), sol.principal)
            # from the child state the original winner must still win
            child = solve_game(board, first)
            assert child.winner is first
            assert _naive_winner_from(board, after) is first


def _naive_winner_from(board, state):
    full = board.full_mask

    def play(split, skew, split_mv):
        open_mask = full & ~(split | skew)
        if not open_mask:
            won = all(splits(split, m) for m in board.sets)
            return Player.SPLIT if won else Player.SKEW
        mover = Player.SPLIT if split_mv else Player.SKEW
        moves = open_mask
        while moves:
            bit = moves & -moves
            moves ^= bit
            child = (
                play(split | bit, skew, False) if split_mv else play(split, skew | bit, True)
            )
            if child is mover:
                return mover
        return mover.opponent

    return play(state.split_claimed, state.skew_claimed, state.to_move is Player.SPLIT)


def test_best_move_examples():
    assert best_move(new_game(B_SMALL, Player.SKEW)) == 2
    # a lost mover gets the least open element
    lost = apply_move(apply_move(new_game(B_SMALL, Player.SKEW), 2), 1)
    assert best_move(lost) == 3
    with pytest.raises(ValueError):
        full = apply_move(lost, 3)
        best_move(full)


# ---------------------------------------------------------------------------
# reduction


def test_reduce_examples():
    one_set = family_from_regions(RegionVector(1, (1, 5)))
    assert reduce_board(one_set) == family_from_regions(RegionVector(1, (1, 1)))
    reduced = reduce_board(B_SMALL)
    assert reduce_board(reduced) == reduced
    assert reduce_board(grid_board([3, 3])).k == 9


def test_reduce_preserves_winner_spot():
    rng = random.Random(23)
    for _ in range(60):
        k = rng.randint(0, 7)
        n = rng.randint(1, 3)
        board = Family(k, tuple(rng.randrange(1 << k) for _ in range(n)))
        red = reduce_board(board)
        for first in Player:
            assert solve_game(board, first).winner is solve_game(red, first).winner


# ---------------------------------------------------------------------------
# pairings


def test_pairing_examples():
    pairing = find_pairing_strategy(Family.from_sets(2, [[1, 2]]), Player.SPLIT)
    assert pairing is not None and pairing.pairs == ((1, 2),)
    skew_pairing = find_pairing_strategy(B_SMALL, Player.SKEW)
    assert skew_pairing is not None and skew_pairing.pairs == ((1, 3),)
    for player in Player:
        assert find_pairing_strategy(grid_board([3, 3]), player) is None


def test_pairing_implies_win_both_ways():
    rng = random.Random(31)
    for _ in range(50):
        k = rng.randint(1, 6)
        board = Family(k, tuple(rng.randrange(1 << k) for _ in range(rng.randint(1, 3))))
        for player in Player:
            pairing = find_pairing_strategy(board, player)
            if pairing is not None:
                assert validate_pairing(board, pairing)
                for first in Player:
                    assert solve_game(board, first).winner is player


def test_validate_pairing_rejects_bad():
    assert not validate_pairing(B_SMALL, Pairing(Player.SKEW, ((1, 2),)))
    assert not validate_pairing(B_SMALL, Pairing(Player.SPLIT, ((1, 3),)))
    # overlapping pairs are invalid outright
    assert not validate_pairing(B_SMALL, Pairing(Player.SKEW, ((1, 2), (2, 3))))


# ---------------------------------------------------------------------------
# census and catalogs

from boards3 import SKEW_TYPES_3, SPLIT_TYPES_3, region_orbit as _region_orbit


def test_census_two_sets():
    res = census(2)
    assert (res.total, res.split_wins) == (8, 7)
    skew_boards = [e for e in res.entries if e.winner is Player.SKEW]
    assert len(skew_boards) == 1
    assert set(skew_boards[0].occupied) == {1, 2, 3}


def test_census_three_sets():
    res = census(3)
    assert (res.total, res.split_wins) == (128, 65)


def test_census_matches_type_catalog():
    res = census(3)
    split_orbit = set()
    for t in SPLIT_TYPES_3:
        split_orbit.update(_region_orbit(t))
    skew_orbit = set()
    for t in SKEW_TYPES_3:
        skew_orbit.update(_region_orbit(t))
    assert not (split_orbit & skew_orbit)
    for entry in res.entries:
        occ = frozenset(entry.occupied)
        if len(occ) <= 2:
            assert entry.winner is Player.SPLIT
            continue
        if entry.winner is Player.SPLIT:
            assert occ in split_orbit, occ
        else:
            assert occ in skew_orbit, occ
    assert sum(1 for e in res.entries if e.winner is Player.SKEW) == 63


def test_census_winners_have_pairings():
    # every reduced 3-set board is decided by a pairing for its winner
    for entry in census(3).entries:
        pairing = find_pairing_strategy(entry.board, entry.winner)
        assert pairing is not None
        assert validate_pairing(entry.board, pairing)


def test_split_win_implies_splittable():
    from setsplit.counting import count_splitters

    for entry in census(3).entries:
        if entry.winner is Player.SPLIT:
            assert count_splitters(entry.board) > 0
    # the converse fails: one point in each two-set region is splittable
    assert count_splitters(B_SMALL) > 0
    assert solve_game(B_SMALL, Player.SKEW).winner is Player.SKEW


# ---------------------------------------------------------------------------
# grids and named boards


def test_grid_construction():
    g = grid_board([3, 3])
    assert g.k == 9 and len(g.sets) == 6
    assert mask_of([1, 2, 3]) in g.sets  # top row
    assert mask_of([1, 4, 7]) in g.sets  # left column
    assert len(grid_board([3, 3], diagonals=True).sets) == 8
    g222 = grid_board([2, 2, 2])
    assert g222.k == 8 and len(g222.sets) == 12
    assert all(m.bit_count() == 2 for m in g222.sets)
    with pytest.raises(ValueError):
        grid_board([1, 5])
    with pytest.raises(ValueError):
        grid_board([2, 3], diagonals=True)


def test_three_by_three_second_player_wins():
    g = grid_board([3, 3])
    assert solve_game(g, Player.SPLIT).winner is Player.SKEW
    assert solve_game(g, Player.SKEW).winner is Player.SPLIT


def test_classic_three_by_three_skew_wins():
    g = grid_board([3, 3], diagonals=True)
    for first in Player:
        assert solve_game(g, first).winner is Player.SKEW


def test_cyclic_five_board():
    z5 = cyclic_board(5, 3)
    assert z5.member_elements()[0] == (1, 2, 3)
    assert solve_game(z5, Player.SPLIT).winner is Player.SKEW
    assert solve_game(z5, Player.SKEW).winner is Player.SPLIT
    for player in Player:
        assert find_pairing_strategy(z5, player) is None


def test_two_by_n_skew_pairing():
    for n in range(2, 5):
        g = grid_board([2, n])
        pairs = tuple((n + j, j % n + 1) for j in range(1, n + 1))
        assert validate_pairing(g, Pairing(Player.SKEW, pairs))
        for first in Player:
            assert solve_game(g, first).winner is Player.SKEW


@pytest.mark.long
def test_four_by_four_skew_wins():
    g = grid_board([4, 4])
    for first in Player:
        assert solve_game(g, first, max_k=16).winner is Player.SKEW


@pytest.mark.long
def test_cube_board_skew_wins():
    g = grid_board([2, 2, 2])
    for first in Player:
        assert solve_game(g, first).winner is Player.SKEW
