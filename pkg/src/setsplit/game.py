"""The splitting game: perfect-play solving, pairings, and board catalogs.

Two players alternately claim elements of [k] until none remain; Split
wins iff the set she claimed splits every board set.  The solver is a
memoized minimax over (splitClaimed, skewClaimed) masks, so transpositions
across move orders collapse.  A position is scored early once every board
set is decided: a set whose intersection window can no longer be hit is a
Skew win outright, and when every set is guaranteed to stay inside its
window regardless of play, Split has already won.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import reduce

import numpy as np

from .core import (
    CapacityError,
    Family,
    RegionVector,
    elements_of,
    family_from_regions,
    region_layout,
    split_window,
    splits,
    venn_decompose,
)

SOLVE_MAX_K = 14
PAIRING_MAX_K = 13


class Player(Enum):
    SPLIT = "Split"
    SKEW = "Skew"

    @property
    def opponent(self) -> "Player":
        return Player.SKEW if self is Player.SPLIT else Player.SPLIT


class IllegalMoveError(ValueError):
    """Move on a claimed element or a finished game."""


@dataclass(frozen=True)
class GameState:
    """Board plus both claim masks; whose turn follows from the counts."""

    board: Family
    split_claimed: int = 0
    skew_claimed: int = 0
    first: Player = Player.SPLIT

    def __post_init__(self) -> None:
        if self.split_claimed & self.skew_claimed:
            raise ValueError("claims overlap")
        if (self.split_claimed | self.skew_claimed) & ~self.board.full_mask:
            raise ValueError("claims outside the ground set")
        diff = self.split_claimed.bit_count() - self.skew_claimed.bit_count()
        allowed = (0, 1) if self.first is Player.SPLIT else (-1, 0)
        if diff not in allowed:
            raise ValueError("claim counts do not alternate from the first player")

    @property
    def claimed(self) -> int:
        return self.split_claimed | self.skew_claimed

    @property
    def over(self) -> bool:
        return self.claimed == self.board.full_mask

    @property
    def to_move(self) -> Player:
        diff = self.split_claimed.bit_count() - self.skew_claimed.bit_count()
        if self.first is Player.SPLIT:
            return Player.SPLIT if diff == 0 else Player.SKEW
        return Player.SKEW if diff == 0 else Player.SPLIT


def new_game(board: Family, first: Player) -> GameState:
    return GameState(board, 0, 0, first)


def legal_moves(state: GameState) -> tuple[int, ...]:
    if state.over:
        return ()
    return elements_of(state.board.full_mask & ~state.claimed)


def apply_move(state: GameState, element: int) -> GameState:
    if state.over:
        raise IllegalMoveError("game is over")
    if not 1 <= element <= state.board.k:
        raise IllegalMoveError(f"element {element} outside the ground set")
    bit = 1 << (element - 1)
    if state.claimed & bit:
        raise IllegalMoveError(f"element {element} already claimed")
    if state.to_move is Player.SPLIT:
        return GameState(state.board, state.split_claimed | bit, state.skew_claimed, state.first)
    return GameState(state.board, state.split_claimed, state.skew_claimed | bit, state.first)


def outcome(state: GameState) -> Player | None:
    """Winner once every element is claimed, else None."""
    if not state.over:
        return None
    a = state.split_claimed
    return Player.SPLIT if all(splits(a, m) for m in state.board.sets) else Player.SKEW


def unsplit_member(board: Family, a: int) -> int | None:
    """A board set witnessing that `a` is not a splitter, or None."""
    for m in board.sets:
        if not splits(a, m):
            return m
    return None


# ---------------------------------------------------------------------------
# solving


@dataclass(frozen=True)
class Solution:
    winner: Player
    principal: int | None  # least winning first move for the mover, if any


class _Solver:
    """Minimax with memoized (split, skew, mover) values for one board."""

    def __init__(self, board: Family):
        self.board = board
        self.full = board.full_mask
        self.members = board.sets
        self.windows = tuple(split_window(m.bit_count()) for m in board.sets)
        self.memo: dict[tuple[int, int, bool], bool] = {}

    def _decided(self, split: int, skew: int) -> bool | None:
        """True/False once no line of play can change the outcome."""
        open_mask = self.full & ~(split | skew)
        all_locked = True
        for m, (lo, hi) in zip(self.members, self.windows):
            cs = (split & m).bit_count()
            un = (open_mask & m).bit_count()
            if cs > hi or cs + un < lo:
                return False
            if cs < lo or cs + un > hi:
                all_locked = False
        return True if all_locked else None

    def split_wins(self, split: int, skew: int, split_to_move: bool) -> bool:
        verdict = self._decided(split, skew)
        if verdict is not None:
            return verdict
        key = (split, skew, split_to_move)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        open_mask = self.full & ~(split | skew)
        result = not split_to_move
        moves = open_mask
        while moves:
            bit = moves & -moves
            moves ^= bit
            if split_to_move:
                if self.split_wins(split | bit, skew, False):
                    result = True
                    break
            else:
                if not self.split_wins(split, skew | bit, True):
                    result = False
                    break
        self.memo[key] = result
        return result

    def best_move_from(self, split: int, skew: int, split_to_move: bool) -> int:
        """Least winning move for the mover; least open element if lost."""
        open_mask = self.full & ~(split | skew)
        if not open_mask:
            raise ValueError("no moves available")
        moves = open_mask
        while moves:
            bit = moves & -moves
            moves ^= bit
            if split_to_move:
                good = self.split_wins(split | bit, skew, False)
            else:
                good = not self.split_wins(split, skew | bit, True)
            if good:
                return bit.bit_length()
        return (open_mask & -open_mask).bit_length()


def reduce_board(board: Family) -> Family:
    """Replace every Venn region by its parity; the winner is preserved.

    The rebuilt board uses the canonical region layout, so reduction is
    idempotent.
    """
    if board.n > 8:
        raise CapacityError("reduction capped at 8 sets")
    return family_from_regions(venn_decompose(board).vector.reduced())


def solve_game(board: Family, first: Player, max_k: int = SOLVE_MAX_K) -> Solution:
    """Exact winner and least-index winning first move under perfect play.

    Boards over max_k elements are reduced first (winner-preserving); the
    principal move then maps back to the least original element of the
    chosen region.
    """
    if board.k <= max_k:
        solver = _Solver(board)
        split_first = first is Player.SPLIT
        winner = Player.SPLIT if solver.split_wins(0, 0, split_first) else Player.SKEW
        if winner is not first or board.k == 0:
            return Solution(winner, None)
        return Solution(winner, solver.best_move_from(0, 0, split_first))

    venn = venn_decompose(board)
    reduced = reduce_board(board)
    if reduced.k > max_k:
        raise CapacityError(f"board still has {reduced.k} > {max_k} elements after reduction")
    sol = solve_game(reduced, first, max_k)
    if sol.principal is None:
        return sol
    # Regions keep their layout order in the reduced board; translate the
    # principal element back to the least element of its original region.
    odd_regions = [idx for idx in region_layout(board.n) if venn.vector.sizes[idx] & 1]
    region_idx = odd_regions[sol.principal - 1]
    original = elements_of(venn.masks[region_idx])[0]
    return Solution(sol.winner, original)


def best_move(state: GameState, max_k: int = SOLVE_MAX_K) -> int:
    """A move preserving the mover's win if one exists, else the least open.

    Deterministic: the least-index qualifying element.
    """
    if state.over:
        raise ValueError("game is over")
    if state.board.k > max_k:
        raise CapacityError(f"move search capped at k <= {max_k}")
    solver = _Solver(state.board)
    return solver.best_move_from(
        state.split_claimed, state.skew_claimed, state.to_move is Player.SPLIT
    )


# ---------------------------------------------------------------------------
# pairing strategies


@dataclass(frozen=True)
class Pairing:
    """Disjoint element pairs certifying a first-player-independent win.

    For Split: every set with exactly one element of each pair (plus any
    unpaired elements) splits the board; for Skew: no such set does.
    """

    player: Player
    pairs: tuple[tuple[int, int], ...]


def _splitter_table(board: Family) -> np.ndarray:
    subsets = np.arange(1 << board.k, dtype=np.uint32)
    ok = np.ones(1 << board.k, dtype=bool)
    for m in board.sets:
        inter = np.bitwise_count(subsets & np.uint32(m)).astype(np.int16)
        ok &= np.abs(2 * inter - np.int16(m.bit_count())) <= 1
    return ok


def validate_pairing(board: Family, pairing: Pairing) -> bool:
    """Check the transversal condition over all respecting sets."""
    k = board.k
    if k > PAIRING_MAX_K:
        raise CapacityError(f"pairing validation capped at k <= {PAIRING_MAX_K}")
    used = 0
    for p, q in pairing.pairs:
        pb, qb = 1 << (p - 1), 1 << (q - 1)
        if used & (pb | qb) or p == q:
            return False
        used |= pb | qb
    table = _splitter_table(board)
    want = pairing.player is Player.SPLIT
    free = elements_of(board.full_mask & ~used)
    choices = [(1 << (p - 1), 1 << (q - 1)) for p, q in pairing.pairs]
    choices += [(0, 1 << (e - 1)) for e in free]
    for picks in itertools.product(*choices):
        a = reduce(lambda acc, b: acc | b, picks, 0)
        if bool(table[a]) is not want:
            return False
    return True


def _maximal_matchings(elements: tuple[int, ...]):
    """All maximal sets of disjoint pairs (floor(len/2) pairs each)."""
    if len(elements) % 2:
        for skip in elements:
            rest = tuple(e for e in elements if e != skip)
            yield from _maximal_matchings(rest)
        return
    if not elements:
        yield ()
        return
    head, rest = elements[0], elements[1:]
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1 :]
        for sub in _maximal_matchings(remaining):
            yield ((head, partner),) + sub


def find_pairing_strategy(board: Family, player: Player) -> Pairing | None:
    """Search all maximal pairings for a valid one; None if none exists.

    Any valid pairing extends to a valid maximal pairing (extra pairs only
    restrict the respecting sets), so maximal pairings suffice.
    """
    k = board.k
    if k > PAIRING_MAX_K:
        raise CapacityError(f"pairing search capped at k <= {PAIRING_MAX_K}")
    table = _splitter_table(board)
    want = player is Player.SPLIT
    elements = tuple(range(1, k + 1))
    for pairs in _maximal_matchings(elements):
        paired = 0
        for p, q in pairs:
            paired |= (1 << (p - 1)) | (1 << (q - 1))
        free = elements_of(board.full_mask & ~paired)
        choices = [(1 << (p - 1), 1 << (q - 1)) for p, q in pairs]
        choices += [(0, 1 << (e - 1)) for e in free]
        valid = True
        for picks in itertools.product(*choices):
            a = 0
            for b in picks:
                a |= b
            if bool(table[a]) is not want:
                valid = False
                break
        if valid:
            return Pairing(player, pairs)
    return None


# ---------------------------------------------------------------------------
# catalogs


@dataclass(frozen=True)
class CensusEntry:
    occupied: tuple[int, ...]  # region indices holding one point
    board: Family
    winner: Player


@dataclass(frozen=True)
class CensusResult:
    total: int
    split_wins: int
    entries: tuple[CensusEntry, ...]


def census(n: int) -> CensusResult:
    """Solve every n-set board with 0/1 points per nonempty-multiplicity
    region (outside region empty), asserting the winner is the same for
    both first players."""
    if n not in (2, 3):
        raise ValueError("census supported for 2 or 3 sets")
    regions = (1 << n) - 1
    entries = []
    split_wins = 0
    for occ in range(1 << regions):
        sizes = [0] * (1 << n)
        for j in range(regions):
            if occ >> j & 1:
                sizes[j + 1] = 1
        board = family_from_regions(RegionVector(n, tuple(sizes)))
        w1 = solve_game(board, Player.SPLIT).winner
        w2 = solve_game(board, Player.SKEW).winner
        if w1 is not w2:
            raise RuntimeError(f"winner depends on the first player for {sizes}")
        if w1 is Player.SPLIT:
            split_wins += 1
        entries.append(
            CensusEntry(tuple(j + 1 for j in range(regions) if occ >> j & 1), board, w1)
        )
    return CensusResult(1 << regions, split_wins, tuple(entries))


def grid_board(dims: list[int] | tuple[int, ...], diagonals: bool = False) -> Family:
    """Rows/columns board of a d-dimensional grid (maximal axis lines).

    Cells are numbered row-major, 1-based: on an m x n grid, cell (i, j)
    is element (i-1)*n + j.  Diagonals are only defined for 2-dimensional
    square grids.
    """
    dims = tuple(dims)
    if not dims or any(d < 2 for d in dims):
        raise ValueError("grid dimensions must all be >= 2")
    total = 1
    for d in dims:
        total *= d
    if total > 64:
        raise ValueError("grid exceeds 64 cells")
    if diagonals and (len(dims) != 2 or dims[0] != dims[1]):
        raise ValueError("diagonals require a square 2-dimensional grid")

    strides = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        strides[i] = strides[i + 1] * dims[i + 1]

    def cell(coords) -> int:  # 0-based coords -> 0-based element
        return sum(c * s for c, s in zip(coords, strides))

    lines = []
    for axis in range(len(dims)):
        other = [range(dims[i]) for i in range(len(dims)) if i != axis]
        for fixed in itertools.product(*other):
            mask = 0
            for v in range(dims[axis]):
                coords = list(fixed[:axis]) + [v] + list(fixed[axis:])
                mask |= 1 << cell(coords)
            lines.append(mask)
    if diagonals:
        m = dims[0]
        lines.append(sum(1 << cell((i, i)) for i in range(m)))
        lines.append(sum(1 << cell((i, m - 1 - i)) for i in range(m)))
    return Family(total, tuple(lines))


def cyclic_board(k: int, span: int) -> Family:
    """Board of the k cyclic intervals {i, i+1, ..., i+span-1} mod k."""
    if not 1 <= span <= k:
        raise ValueError("need 1 <= span <= k")
    sets = []
    for i in range(k):
        mask = 0
        for j in range(span):
            mask |= 1 << ((i + j) % k)
        sets.append(mask)
    return Family(k, tuple(sets))
