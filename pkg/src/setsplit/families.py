"""Splitting families: construction, verification, and structure.

A family on [k] is a splitting family when every subset of [k] is split by
some member.  Families are equivalent when one maps to the other by
complementing members and permuting ground elements; since families are
unordered collections, relabelling the members is part of the same
equivalence.  Working currency here is the incidence column: element e's
column is the bit vector of members containing e, so a family-up-to-ground-
permutation is just a multiset of columns and the equivalence group acts by
XOR (complementation) and bit permutation (member relabelling).

The minimum-size census enumerates column sets in ascending order, pruning
any prefix whose own elements already contain an unsplit subset (adding
elements never changes the counts of an existing subset, so such a prefix
is permanently dead) and any prefix that is not the lexicographically least
member of its orbit (orderly generation; prefixes of canonical sets are
canonical).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import CapacityError, Family, elements_of, splits

SPLITTING_CHECK_MAX_K = 24
ENUMERATION_MAX_K = 12
T_SPLITTING_SEARCH_MAX_K = 10


# ---------------------------------------------------------------------------
# construction and verification


def standard_family(k: int) -> Family:
    """The ceil(k/2) consecutive intervals of length ceil(k/2) on [k].

    Interval i is {i, ..., i + ceil(k/2) - 1}; for odd k this equals the
    restriction to [k] of the even construction on k + 1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    half = (k + 1) // 2
    base = (1 << half) - 1
    return Family(k, tuple((base << i) & ((1 << k) - 1) for i in range(half)))


def incidence_columns(family: Family) -> tuple[int, ...]:
    """Column of each ground element: bit i-1 set iff member i contains it."""
    cols = []
    for e in range(family.k):
        c = 0
        for i, m in enumerate(family.sets):
            if m >> e & 1:
                c |= 1 << i
        cols.append(c)
    return tuple(cols)


def family_from_columns(n: int, columns) -> Family:
    """Family on [len(columns)] whose incidence columns are as given."""
    members = [0] * n
    for e, c in enumerate(columns):
        for i in range(n):
            if c >> i & 1:
                members[i] |= 1 << e
    return Family(len(columns), tuple(members))


def _popcounts(limit: int) -> np.ndarray:
    return np.bitwise_count(np.arange(limit, dtype=np.uint32)).astype(np.int16)


def is_splitting_family(family: Family) -> bool:
    """True iff every B subseteq [k] is split by some member."""
    return find_unsplit_subset(family) is None


def find_unsplit_subset(family: Family) -> int | None:
    """Smallest subset mask split by no member, or None."""
    k = family.k
    if k > SPLITTING_CHECK_MAX_K:
        raise CapacityError(f"splitting check capped at k <= {SPLITTING_CHECK_MAX_K}")
    subsets = np.arange(1 << k, dtype=np.uint32)
    sizes = _popcounts(1 << k)
    ok = np.zeros(1 << k, dtype=bool)
    ok[0] = True  # the empty subset is split by any candidate at all
    for m in family.sets:
        inter = np.bitwise_count(subsets & np.uint32(m)).astype(np.int16)
        np.logical_or(ok, np.abs(2 * inter - sizes) <= 1, out=ok)
    bad = np.flatnonzero(~ok)
    return None if bad.size == 0 else int(bad[0])


def is_t_splitting_family(family: Family, t: int, mode: str = "exactly") -> bool:
    """True iff every subset of size t (or of size <= t) is split.

    mode is "exactly" or "at-most".
    """
    if mode not in ("exactly", "at-most"):
        raise ValueError("mode must be 'exactly' or 'at-most'")
    if t > family.k:
        raise ValueError("t cannot exceed k")
    if family.k > 32 or t > 6:
        raise CapacityError("subset sweep capped at k <= 32, t <= 6")
    sizes = range(1, t + 1) if mode == "at-most" else (t,)
    for size in sizes:
        for combo in itertools.combinations(range(family.k), size):
            b = 0
            for e in combo:
                b |= 1 << e
            if not any(splits(a, b) for a in family.sets):
                return False
    return True


def is_extendable(family: Family) -> bool:
    """True iff some splitting family on k+1 restricts to this family.

    Candidates add element k+1 to an arbitrary subfamily (equivalently,
    give the new element any of the 2**n columns).
    """
    if not is_splitting_family(family):
        raise ValueError("extendability is defined for splitting families")
    k, n = family.k, family.n
    if k + 1 > SPLITTING_CHECK_MAX_K:
        raise CapacityError("extension check exceeds splitting-check cap")
    new_bit = 1 << k
    for c in range(1 << n):
        extended = tuple(
            m | new_bit if c >> i & 1 else m for i, m in enumerate(family.sets)
        )
        if is_splitting_family(Family(k + 1, extended)):
            return True
    return False


# ---------------------------------------------------------------------------
# Hamming representation


@dataclass(frozen=True)
class HammingRep:
    """Incidence columns in ground order, adjacency = Hamming distance 1."""

    n: int
    columns: tuple[int, ...]

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.columns)))

    def edges(self) -> tuple[tuple[int, int], ...]:
        vs = self.vertices()
        return tuple(
            (a, b) for a, b in itertools.combinations(vs, 2) if (a ^ b).bit_count() == 1
        )

    def degree(self, v: int) -> int:
        return sum(1 for u in self.vertices() if (u ^ v).bit_count() == 1)

    def weight(self, v: int) -> int:
        return v.bit_count()


def hamming_representation(family: Family) -> HammingRep:
    if family.n > 16:
        raise CapacityError("Hamming representation capped at 16 sets")
    return HammingRep(family.n, incidence_columns(family))


def is_connected(rep: HammingRep) -> bool:
    """Connectivity of the distance-1 graph on distinct columns."""
    vs = rep.vertices()
    if len(vs) <= 1:
        return True
    seen = {vs[0]}
    stack = [vs[0]]
    rest = set(vs[1:])
    while stack:
        v = stack.pop()
        near = {u for u in rest if (u ^ v).bit_count() == 1}
        rest -= near
        stack.extend(near)
        seen |= near
    return not rest


@dataclass(frozen=True)
class YWitness:
    """Four columns forming a forbidden claw in the subset order.

    kind 'a': centre below three incomparable upper vertices; 'b': one
    vertex below the centre, two above; 'c': two below, one above;
    'd': centre above three lower vertices.  In every kind no member index
    occurs in exactly two of the four columns, so the four matching ground
    elements form an unsplit 4-subset.
    """

    kind: str
    vertices: tuple[int, int, int, int]


_Y_KINDS = {3: "a", 2: "b", 1: "c", 0: "d"}


def find_forbidden_y(rep: HammingRep) -> YWitness | None:
    """First forbidden claw among the distinct columns, or None.

    A witness is four distinct columns with (i) no member index present in
    exactly two of them and (ii) some column comparable (as a subset) to
    the other three.  Any vertex of degree >= 3 in the distance-1 graph
    sits inside such a quadruple.
    """
    vs = rep.vertices()
    if len(vs) > 64:
        raise CapacityError("claw search capped at 64 distinct columns")
    n = rep.n
    for quad in itertools.combinations(vs, 4):
        if any(sum(v >> i & 1 for v in quad) == 2 for i in range(n)):
            continue
        for centre in quad:
            others = [v for v in quad if v != centre]
            if all((centre & v == centre) or (centre | v == centre) for v in others):
                above = sum(1 for v in others if centre & v == centre)
                return YWitness(_Y_KINDS[above], quad)
    return None


# ---------------------------------------------------------------------------
# equivalence and canonical forms


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[tuple[int, ...], ...]:
    """Value-relabelling table per bit permutation of width n (n <= 6)."""
    tables = []
    for perm in itertools.permutations(range(n)):
        table = []
        for v in range(1 << n):
            w = 0
            for j, src in enumerate(perm):
                if v >> src & 1:
                    w |= 1 << j
            table.append(w)
        tables.append(tuple(table))
    return tuple(tables)


def _apply_perm(perm: tuple[int, ...], v: int) -> int:
    w = 0
    for j, src in enumerate(perm):
        if v >> src & 1:
            w |= 1 << j
    return w


def _canonical_columns(n: int, cols: tuple[int, ...]) -> tuple[int, ...]:
    """Lex-least sorted column tuple over XOR shifts and bit permutations.

    The minimum starts with column 0, so only shifts by present columns
    need scanning.
    """
    if not cols:
        return cols
    best = None
    shifts = sorted(set(cols))
    if n <= 6:
        for c in shifts:
            shifted = [x ^ c for x in cols]
            for table in _perm_tables(n):
                cand = tuple(sorted(table[x] for x in shifted))
                if best is None or cand < best:
                    best = cand
    else:
        for c in shifts:
            shifted = [x ^ c for x in cols]
            for perm in itertools.permutations(range(n)):
                cand = tuple(sorted(_apply_perm(perm, x) for x in shifted))
                if best is None or cand < best:
                    best = cand
    return best


def canonical_form(family: Family) -> Family:
    """Distinguished representative of the family's equivalence class.

    Minimises the sorted incidence-column tuple over all member
    complementations and member relabellings, then deals ground elements
    out in sorted-column order.  Idempotent; two families are equivalent
    iff their canonical forms are identical.
    """
    n = family.n
    if n > 8:
        raise CapacityError("canonical form capped at 8 sets")
    return family_from_columns(n, _canonical_columns(n, incidence_columns(family)))


def families_equivalent(f: Family, g: Family) -> bool:
    if f.k != g.k or f.n != g.n:
        return False
    return canonical_form(f) == canonical_form(g)


# ---------------------------------------------------------------------------
# minimum-size census


@dataclass(frozen=True)
class FamilyClass:
    """One equivalence class of minimum-size splitting families."""

    canonical: Family
    size: int
    uniform: bool
    standard_equivalent: bool


def _is_uniform(family: Family) -> bool:
    lo, hi = family.k // 2, (family.k + 1) // 2
    return all(m.bit_count() in (lo, hi) for m in family.sets)


class _ColumnSearch:
    """DFS over ascending column sets with permanently-unsplit pruning.

    Prefixes are themselves families (on their own elements); any unsplit
    subset of a prefix stays unsplit forever, so every prefix must pass the
    full internal splitting check, maintained incrementally as a
    (2**j, n) matrix of member intersection counts.
    """

    def __init__(self, k: int, n: int, canonical_only: bool):
        self.k = k
        self.n = n
        self.canonical_only = canonical_only
        self.sizes = _popcounts(1 << k) if k else np.zeros(1, np.int16)
        self.leaves: list[tuple[int, ...]] = []
        self.stop_on_first = False
        self.found = False

    def run(self) -> list[tuple[int, ...]]:
        if self.k == 0:
            return [()]
        counts = np.zeros((1, self.n), dtype=np.int16)
        self._extend((0,), self._append_counts(counts, 0), 0)
        return self.leaves

    def _append_counts(self, counts: np.ndarray, col: int) -> np.ndarray | None:
        j = counts.shape[0]
        bits = np.array([col >> i & 1 for i in range(self.n)], dtype=np.int16)
        new_rows = counts + bits
        new_sizes = self.sizes[:j] + 1
        ok = (np.abs(2 * new_rows - new_sizes[:, None]) <= 1).any(axis=1)
        if not ok.all():
            return None
        return np.vstack([counts, new_rows])

    def _extend(self, cols: tuple[int, ...], counts: np.ndarray, depth_unused) -> None:
        if self.stop_on_first and self.found:
            return
        j = len(cols)
        if self.canonical_only and not self._prefix_canonical(cols):
            return
        if j == self.k:
            self.leaves.append(cols)
            self.found = True
            return
        top = 1 << self.n
        for c in range(cols[-1] + 1, top):
            if top - c < self.k - j:
                break
            nxt = self._append_counts(counts, c)
            if nxt is not None:
                self._extend(cols + (c,), nxt, 0)
                if self.stop_on_first and self.found:
                    return

    def _prefix_canonical(self, cols: tuple[int, ...]) -> bool:
        n = self.n
        tables = _perm_tables(n) if n <= 6 else None
        for c in cols:
            shifted = [x ^ c for x in cols]
            if tables is not None:
                for table in tables:
                    if tuple(sorted(table[x] for x in shifted)) < cols:
                        return False
            else:
                for perm in itertools.permutations(range(n)):
                    if tuple(sorted(_apply_perm(perm, x) for x in shifted)) < cols:
                        return False
        return True


def splitting_family_exists(k: int, n: int) -> bool:
    """Exhaustive existence of a splitting family on [k] with n sets."""
    if k > ENUMERATION_MAX_K:
        raise CapacityError(f"census search capped at k <= {ENUMERATION_MAX_K}")
    if n == 0:
        return k == 0
    if k > 1 << n:
        return False  # needs k distinct columns
    search = _ColumnSearch(k, n, canonical_only=False)
    search.stop_on_first = True
    return bool(search.run())


def enumerate_minimal_splitting_families(k: int) -> list[FamilyClass]:
    """All equivalence classes of splitting families of size ceil(k/2).

    Orderly generation over column sets: each class appears exactly once,
    represented by its canonical form.
    """
    if k < 1 or k > ENUMERATION_MAX_K:
        raise CapacityError(f"census capped at 1 <= k <= {ENUMERATION_MAX_K}")
    n = (k + 1) // 2
    std = canonical_form(standard_family(k))
    out = []
    for cols in _ColumnSearch(k, n, canonical_only=True).run():
        fam = family_from_columns(n, cols)
        out.append(
            FamilyClass(
                canonical=fam,
                size=n,
                uniform=_is_uniform(fam),
                standard_equivalent=fam == std,
            )
        )
    out.sort(key=lambda c: incidence_columns(c.canonical))
    return out


# ---------------------------------------------------------------------------
# smallest 4-splitting / <=4-splitting families


@dataclass(frozen=True)
class TSplittingMinimum:
    size: int
    witness: Family
    mode: str


def _search_4split(k: int, n: int, allow_dups: bool) -> tuple[int, ...] | None:
    """Nondecreasing column multisets whose every 4-subset is split.

    A column repeated four times is unsplit outright, so multiplicities
    cap at 3.  The first column is normalised to 0 by an XOR shift.
    """
    cap = 1 if not allow_dups else 3
    top = 1 << n

    def remaining_capacity(col: int, used_here: int) -> int:
        return (top - col) * cap - used_here

    result: list[tuple[int, ...]] = []

    def extend(cols: list[int]) -> bool:
        j = len(cols)
        if j == k:
            result.append(tuple(cols))
            return True
        last = cols[-1] if cols else 0
        used_here = sum(1 for c in cols if c == last) if cols else 0
        for c in range(last, top):
            here = used_here if c == last else 0
            if c != last:
                used_here = 0
            if remaining_capacity(c, here) < k - j:
                continue
            if here >= cap:
                continue
            ok = True
            for triple in itertools.combinations(range(j), 3):
                quad = (cols[triple[0]], cols[triple[1]], cols[triple[2]], c)
                if not any(sum(v >> i & 1 for v in quad) == 2 for i in range(n)):
                    ok = False
                    break
            if ok:
                cols.append(c)
                if extend(cols):
                    cols.pop()
                    return True
                cols.pop()
        return False

    found = extend([0])
    return result[0] if found else None


def min_t_splitting_size(k: int, mode: str = "exactly") -> TSplittingMinimum:
    """Least family size splitting all 4-subsets (or all subsets of size <= 4).

    Exhaustive over column multisets per candidate size, smallest first;
    the witness is verified against the subset sweep before returning.
    """
    if mode not in ("exactly", "at-most"):
        raise ValueError("mode must be 'exactly' or 'at-most'")
    if k < 4 or k > T_SPLITTING_SEARCH_MAX_K:
        raise CapacityError(f"search capped at 4 <= k <= {T_SPLITTING_SEARCH_MAX_K}")
    for n in range(1, (k + 1) // 2 + 1):
        cols = _search_4split(k, n, allow_dups=(mode == "exactly"))
        if cols is None:
            continue
        witness = family_from_columns(n, cols)
        if not is_t_splitting_family(witness, 4, mode):
            raise RuntimeError("search returned an invalid witness")
        return TSplittingMinimum(n, witness, mode)
    raise RuntimeError("no family found up to the splitting-family size")


# ---------------------------------------------------------------------------
# structure of connected minimum <=4-splitting families


def classify_connected_le4_minimal(family: Family) -> str:
    """Match a connected minimum-size <=4-splitting family to its shape.

    Returns "standard" (distance-1 graph is a cycle, family equivalent to
    the interval construction on k), "restriction-of-standard" (a path;
    k odd, the restriction from k + 1), or "not-applicable" when the
    preconditions fail (wrong size, empty member, not <=4-splitting, or
    disconnected).
    """
    k = family.k
    if k < 1 or 0 in family.sets or family.n != (k + 1) // 2:
        return "not-applicable"
    if not is_t_splitting_family(family, min(4, k), "at-most"):
        return "not-applicable"
    rep = hamming_representation(family)
    if len(rep.vertices()) != k or not is_connected(rep):
        return "not-applicable"
    degrees = [rep.degree(v) for v in rep.vertices()]
    if max(degrees, default=0) > 2:
        return "not-applicable"  # impossible for a <=4-splitting family
    is_cycle = k >= 3 and all(d == 2 for d in degrees)
    label = "standard" if (is_cycle or k % 2 == 0) else "restriction-of-standard"
    if not families_equivalent(family, standard_family(k)):
        raise RuntimeError("connected minimal family not equivalent to standard shape")
    return label
