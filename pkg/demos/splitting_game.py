#!/usr/bin/env python3
"""The splitting game, solved: censuses, pairings, and grid boards.

Split and Skew alternately claim elements of [k]; Split wins iff her
claimed set splits every board set.  The solver below is exact, so each
section reports perfect-play outcomes.
"""

from setsplit import (
    Family,
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
)


def banner(title):
    print(f"\n=== {title} ===")


banner("A splittable board Split still loses")
board = Family.from_sets(3, [[1, 2], [2, 3]])
for first in Player:
    sol = solve_game(board, first)
    print(f"first={first.value}: winner {sol.winner.value}"
          + (f", best opening {sol.principal}" if sol.principal else ""))

banner("Watch the principal line")
state = new_game(board, Player.SKEW)
while not state.over:
    move = best_move(state)
    print(f"{state.to_move.value} claims {move}   (open: {legal_moves(state)})")
    state = apply_move(state, move)
print("winner:", outcome(state).value)

banner("Parity reduction shrinks boards without changing the winner")
big = Family.from_sets(9, [[1, 2, 3, 4, 5], [4, 5, 6, 7, 8]])
print("before:", big.member_elements(), " after:", reduce_board(big).member_elements())
for first in Player:
    assert solve_game(big, first).winner is solve_game(reduce_board(big), first).winner
print("winners agree for both first players")

banner("Census of reduced boards: how often does Split win?")
for n in (2, 3):
    res = census(n)
    print(f"{n} sets: Split wins {res.split_wins}/{res.total}")

banner("Pairing strategies decide games regardless of who starts")
pairing = find_pairing_strategy(board, Player.SKEW)
print("skewing pairing on the small board:", pairing.pairs)
g22 = grid_board([2, 2])
print("2x2 grid, Skew:", find_pairing_strategy(g22, Player.SKEW).pairs)
g33 = grid_board([3, 3])
print("3x3 grid has no pairing for either player:",
      find_pairing_strategy(g33, Player.SPLIT), find_pairing_strategy(g33, Player.SKEW))

banner("Grid games")
for dims, diag in (([3, 3], False), ([3, 3], True), ([2, 5], False), ([3, 4], False)):
    g = grid_board(dims, diag)
    w1 = solve_game(g, Player.SPLIT).winner.value
    w2 = solve_game(g, Player.SKEW).winner.value
    name = "x".join(map(str, dims)) + ("+diagonals" if diag else "")
    print(f"{name}: Split first -> {w1}, Skew first -> {w2}")

banner("A five-set cycle where the second player always wins")
z5 = cyclic_board(5, 3)
print("board:", z5.member_elements())
print("Split first ->", solve_game(z5, Player.SPLIT).winner.value,
      "; Skew first ->", solve_game(z5, Player.SKEW).winner.value)
print("pairings:", find_pairing_strategy(z5, Player.SPLIT),
      find_pairing_strategy(z5, Player.SKEW))
