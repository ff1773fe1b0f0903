"""Exact and approximate splitter counting for splittable families.

All exact counts are Python integers (arbitrary precision); ratio checks
use fractions.  The brute-force count over all 2**k candidate splitters is
the oracle; the region-wise convolution and the one/two-set closed forms
must agree with it wherever both are computable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .core import (
    Arrangement2,
    CapacityError,
    Family,
    RegionVector,
    split_window,
    venn_decompose,
)

BRUTE_FORCE_MAX_K = 24


def count_splitters(family: Family) -> int:
    """Number of sets A subseteq [k] splitting every member (brute force).

    Sweeps all 2**k candidates in vectorised chunks.
    """
    if family.k > BRUTE_FORCE_MAX_K:
        raise CapacityError(f"brute force capped at k <= {BRUTE_FORCE_MAX_K}")
    import numpy as np

    total = 0
    chunk = 1 << min(family.k, 20)
    for start in range(0, 1 << family.k, chunk):
        cands = np.arange(start, start + chunk, dtype=np.uint32)
        ok = np.ones(chunk, dtype=bool)
        for m in family.sets:
            inter = np.bitwise_count(cands & np.uint32(m)).astype(np.int16)
            ok &= np.abs(2 * inter - np.int16(m.bit_count())) <= 1
        total += int(np.count_nonzero(ok))
    return total


@lru_cache(maxsize=None)
def _binom_prefix(n: int) -> tuple[int, ...]:
    """Prefix sums P with P[i] = sum_{j<i} C(n, j); window sums via P."""
    row = [math.comb(n, i) for i in range(n + 1)]
    prefix = [0]
    for v in row:
        prefix.append(prefix[-1] + v)
    return tuple(prefix)


def _window_sum(n: int, lo: int, hi: int) -> int:
    """Sum of C(n, c) over lo <= c <= hi, clipped to 0..n."""
    lo = max(lo, 0)
    hi = min(hi, n)
    if lo > hi:
        return 0
    p = _binom_prefix(n)
    return p[hi + 1] - p[lo]


def count_splitters_regions(regions: RegionVector) -> int:
    """Splitter count from Venn-region sizes alone.

    Sums, over the per-region intersection counts, the product of binomial
    choices, keeping each member's running intersection inside its split
    window.  Regions touching at most one member are folded in closed form,
    so only the shared regions are enumerated.
    """
    n = regions.n
    if n > 8:
        raise CapacityError("region convolution capped at 8 sets")
    sizes = regions.sizes
    windows = [split_window(regions.member_size(i)) for i in range(1, n + 1)]

    shared = []  # regions meeting >= 2 members, widest overlap first
    private = [[] for _ in range(n)]  # region sizes per single member
    free = sizes[0]
    for idx in range(1, 1 << n):
        if not sizes[idx]:
            continue
        if idx.bit_count() == 1:
            private[idx.bit_length() - 1].append(sizes[idx])
        else:
            shared.append((idx, sizes[idx]))
    shared.sort(key=lambda t: -t[0].bit_count())

    # Max remaining shared contribution per member, per DFS depth.
    suffix = [[0] * n]
    for idx, size in reversed(shared):
        prev = suffix[0]
        suffix.insert(0, [prev[i] + (size if idx >> i & 1 else 0) for i in range(n)])

    # Private regions of one member combine into a single window sum; a
    # member may own several (impossible for Venn regions, kept general).
    def private_factor(member: int, cur: int) -> int:
        lo, hi = windows[member]
        lo -= cur
        hi -= cur
        parts = private[member]
        if not parts:
            return 1 if lo <= 0 <= hi else 0
        if len(parts) == 1:
            return _window_sum(parts[0], lo, hi)
        total = 0
        first, rest = parts[0], parts[1:]
        for c in range(parts[0] + 1):
            sub = _one_member_windowed(tuple(rest), lo - c, hi - c)
            total += math.comb(first, c) * sub
        return total

    cur = [0] * n

    def dfs(depth: int) -> int:
        for i in range(n):
            lo, hi = windows[i]
            if cur[i] > hi or cur[i] + suffix[depth][i] + sum(private[i]) < lo:
                return 0
        if depth == len(shared):
            prod = 1
            for i in range(n):
                f = private_factor(i, cur[i])
                if not f:
                    return 0
                prod *= f
            return prod
        idx, size = shared[depth]
        members = [i for i in range(n) if idx >> i & 1]
        total = 0
        for c in range(size + 1):
            for i in members:
                cur[i] += c
            total += math.comb(size, c) * dfs(depth + 1)
            for i in members:
                cur[i] -= c
        return total

    return (1 << free) * dfs(0)


def _one_member_windowed(parts: tuple[int, ...], lo: int, hi: int) -> int:
    if not parts:
        return 1 if lo <= 0 <= hi else 0
    if len(parts) == 1:
        return _window_sum(parts[0], lo, hi)
    total = 0
    for c in range(parts[0] + 1):
        total += math.comb(parts[0], c) * _one_member_windowed(parts[1:], lo - c, hi - c)
    return total


def splitters_one_set(b_size: int, k: int) -> int:
    """Closed-form splitter count of a single set of the given size on [k]."""
    if not 0 <= b_size <= k:
        raise ValueError("need 0 <= b_size <= k")
    if b_size % 2 == 0:
        return (1 << (k - b_size)) * math.comb(b_size, b_size // 2)
    return (1 << (k - b_size + 1)) * math.comb(b_size, (b_size - 1) // 2)


def _two_set(a1: int, b: int, a2: int, d: int) -> int:
    """Splitter count of the two-set arrangement (a1, b, a2, d).

    Odd member sizes reduce to the even case by growing the private part of
    each odd member by one; the reduction leaves the count unchanged.
    """
    if (a1 + b) % 2:
        a1 += 1
    if (a2 + b) % 2:
        a2 += 1
    t1 = (a1 + b) // 2
    t2 = (a2 + b) // 2
    total = 0
    for i in range(b + 1):
        if 0 <= t1 - i <= a1 and 0 <= t2 - i <= a2:
            total += math.comb(a1, t1 - i) * math.comb(b, i) * math.comb(a2, t2 - i)
    return (1 << d) * total


def splitters_two_set(arr: Arrangement2) -> int:
    return _two_set(arr.a1, arr.b, arr.a2, arr.d)


def approx_splitters_two_set(arr: Arrangement2) -> float:
    """Normal-approximation estimate 2**(k+1) / (pi * sqrt(a1a2+a1b+a2b))."""
    s = arr.a1 * arr.a2 + arr.a1 * arr.b + arr.a2 * arr.b
    if s == 0:
        raise ValueError("approximation undefined when a1, b, a2 are all zero")
    return 2.0 ** (arr.k + 1) / (math.pi * math.sqrt(s))


def franel(m: int) -> int:
    """Sum of C(m, i)**3; the splitter count of the balanced (m, m, m, 0)."""
    return sum(math.comb(m, i) ** 3 for i in range(m + 1))


@dataclass(frozen=True)
class MinResult:
    """Certified minimum splitter count with the achieving arrangements."""

    arrangement: RegionVector
    count: int
    all_minimizers: tuple[RegionVector, ...]
    matches_reference: bool | None = None


def min_one_set(k: int) -> MinResult:
    """Minimum splitter count over single-set families on [k], by scan."""
    if k < 1:
        raise ValueError("k must be >= 1")
    best = None
    argmins: list[RegionVector] = []
    for b_size in range(k + 1):
        c = splitters_one_set(b_size, k)
        if best is None or c < best:
            best = c
            argmins = []
        if c == best:
            argmins.append(RegionVector(1, (k - b_size, b_size)))
    return MinResult(argmins[0], best, tuple(argmins))


def _compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative ints summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def min_two_set(k: int) -> MinResult:
    """Exhaustive scan of all (a1, b, a2, d) splitting k, exact counts.

    Minimizers are reported up to swapping the two member sets
    (a1 <-> a2); the scan itself covers every composition.
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    best = None
    argmins: set[tuple[int, int, int, int]] = set()
    for a1, b, a2, d in _compositions(k, 4):
        c = _two_set(a1, b, a2, d)
        if best is None or c < best:
            best = c
            argmins = set()
        if c == best:
            argmins.add((min(a1, a2), b, max(a1, a2), d))
    vecs = tuple(
        RegionVector(2, (d, a1, a2, b)) for a1, b, a2, d in sorted(argmins)
    )
    return MinResult(vecs[0], best, vecs)


def min_two_set_reference(k: int) -> Arrangement2:
    """The claimed minimizing arrangement for k mod 3 (d = 0)."""
    if k % 3 == 0:
        m = k // 3
        return Arrangement2(m, m, m, 0)
    if k % 3 == 1:
        m = (k + 2) // 3
        return Arrangement2(m - 2, m, m, 0)
    m = (k - 2) // 3
    return Arrangement2(m, m, m + 2, 0)


MIN_THREE_MAX_K = 20

# Interior region order for n = 3 vectors: privates {1}, {2}, {3}, then
# pairwise {1,2}, {1,3}, {2,3}, then the centre {1,2,3}.
_INTERIOR_IDX = (1, 2, 4, 3, 5, 6, 7)


def _three_vector(interior: Sequence[int], d: int) -> RegionVector:
    sizes = [d] + [0] * 7
    for idx, s in zip(_INTERIOR_IDX, interior):
        sizes[idx] = s
    return RegionVector(3, tuple(sizes))


@lru_cache(maxsize=None)
def _three_interior_min(j: int) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Min splitter count over 3-set interiors of total j, with argmins.

    Only splittable interiors (count > 0) participate.  Argmins are capped
    de-duplicated under permutations of the three member sets.
    """
    best = None
    argmins: set[tuple[int, ...]] = set()
    for interior in _compositions(j, 7):
        c = count_splitters_regions(_three_vector(interior, 0))
        if not c:
            continue
        if best is None or c < best:
            best = c
            argmins = set()
        if c == best:
            argmins.add(_canonical_interior(interior))
    if best is None:
        raise RuntimeError(f"no splittable 3-set interior of total {j}")
    return best, tuple(sorted(argmins))


# The six permutations of member sets act on (a1,a2,a3, b12,b13,b23, c):
# privates permute directly, pairwise regions permute with the index pair.
_S3 = (
    ((0, 1, 2), (3, 4, 5)),
    ((0, 2, 1), (4, 3, 5)),
    ((1, 0, 2), (3, 5, 4)),
    ((1, 2, 0), (5, 3, 4)),
    ((2, 0, 1), (4, 5, 3)),
    ((2, 1, 0), (5, 4, 3)),
)


def _interior_orbit(interior: Sequence[int]):
    a = interior[:3]
    b = interior[3:6]
    c = interior[6]
    for pa, pb in _S3:
        yield (a[pa[0]], a[pa[1]], a[pa[2]], b[pb[0] - 3], b[pb[1] - 3], b[pb[2] - 3], c)


def _canonical_interior(interior: Sequence[int]) -> tuple[int, ...]:
    return min(_interior_orbit(interior))


def three_set_reference_pattern(k: int) -> RegionVector | None:
    """The conjectured minimum 3-set arrangement for k >= 6, by k mod 6.

    Patterns cycle with period 6: pairwise regions near k/3 each, a centre
    of 1 or 2, and at most one occupied private region.  Returns None when
    the pattern's parameter would go negative (only for k < 6).
    """
    r = k % 6
    if r == 0:
        ell = k // 3 - 1
        interior = (1, 0, 0, ell, ell, ell + 1, 1)
    elif r == 1:
        ell = (k - 4) // 3
        interior = (0, 0, 0, ell, ell, ell + 2, 2)
    elif r == 2:
        ell = (k - 5) // 3
        interior = (1, 0, 0, ell, ell, ell + 3, 1)
    elif r == 3:
        ell = (k - 6) // 3
        interior = (0, 0, 0, ell + 2, ell + 2, ell, 2)
    elif r == 4:
        ell = (k - 1) // 3
        interior = (1, 0, 0, ell, ell, ell - 1, 1)
    else:
        ell = (k - 2) // 3
        interior = (0, 0, 0, ell, ell, ell, 2)
    if min(interior) < 0:
        return None
    return _three_vector(interior, 0)


def min_three_set(k: int) -> MinResult:
    """Exhaustive minimum over all 3-set region vectors summing to k.

    Splittable arrangements only (count > 0).  Outside points scale the
    count by 2**d, so the sweep runs over interior totals k - d.
    matches_reference reports whether some minimizer equals the k mod 6
    pattern (up to permuting the member sets); None when k < 6.
    """
    if not 3 <= k <= MIN_THREE_MAX_K:
        raise CapacityError(f"three-set scan capped at 3 <= k <= {MIN_THREE_MAX_K}")
    best = None
    argmins: set[tuple[int, tuple[int, ...]]] = set()  # (d, canonical interior)
    for d in range(k + 1):
        interior_best, interior_mins = _three_interior_min(k - d)
        c = (1 << d) * interior_best
        if best is None or c < best:
            best = c
            argmins = set()
        if c == best:
            argmins.update((d, im) for im in interior_mins)
    vecs = tuple(_three_vector(im, d) for d, im in sorted(argmins))
    pattern = three_set_reference_pattern(k)
    matches = None
    if pattern is not None:
        pat_key = (0, _canonical_interior(tuple(pattern.sizes[i] for i in _INTERIOR_IDX)))
        matches = pat_key in argmins
    return MinResult(vecs[0], best, vecs, matches)


def check_three_set_recurrence(counts: Mapping[int, int]) -> bool:
    """Check N_{k+1}/N_k against the observed ratio law, exactly.

    The ratio is 2 - 1/(floor(k/6) + 1) for even k and 2 for odd k.
    Requires a contiguous range of keys starting at 6.
    """
    ks = sorted(counts)
    if not ks or ks[0] != 6 or ks != list(range(6, ks[-1] + 1)):
        raise ValueError("counts must cover a contiguous range starting at 6")
    for k in ks[:-1]:
        ratio = Fraction(counts[k + 1], counts[k])
        expected = Fraction(2) - Fraction(1, k // 6 + 1) if k % 2 == 0 else Fraction(2)
        if ratio != expected:
            return False
    return True


@dataclass(frozen=True)
class LemmaViolation:
    lemma: str
    arrangement: tuple[int, int, int, int]
    compared_to: tuple[int, int, int, int]
    count: int
    compared_count: int


def verify_point_moving_lemmas(k: int) -> list[LemmaViolation]:
    """Exhaustively check the point-moving (in)equalities at total k.

    Covers: permutation invariance of (a1, b, a2) at even member sizes;
    the odd-perturbation inequality; the pull-inward step from a nonempty
    outside region; and the two-point rebalancing inequality.  Returns the
    list of counterexamples (expected empty).
    """
    if k > 15:
        raise CapacityError("lemma sweep capped at k <= 15")
    bad: list[LemmaViolation] = []

    def record(lemma, arr, other):
        c0, c1 = _two_set(*arr), _two_set(*other)
        bad.append(LemmaViolation(lemma, arr, other, c0, c1))

    import itertools

    for a1, b, a2, d in _compositions(k, 4):
        even = (a1 + b) % 2 == 0 and (a2 + b) % 2 == 0
        base = _two_set(a1, b, a2, d)

        if even:
            for p in itertools.permutations((a1, b, a2)):
                if _two_set(p[0], p[1], p[2], d) != base:
                    record("swap", (a1, b, a2, d), (p[0], p[1], p[2], d))

        if even and d == 0:
            for e1 in (-1, 0, 1):
                for e2 in (-1, 0, 1):
                    other = (a1 + e1, b - e1 - e2, a2 + e2, 0)
                    if min(other) < 0:
                        continue
                    if base > _two_set(*other):
                        record("no_odd", (a1, b, a2, d), other)

        if b > 0 and d > 0:
            pulled = (a1 + 1, b - 1, a2 + 1, d - 1)
            if _two_set(*pulled) > base:
                record("ext_zero", pulled, (a1, b, a2, d))

        if even and d == 0 and 2 <= a1 <= a2:
            moved = (a1 - 2, b, a2 + 2, 0)
            if base > _two_set(*moved):
                record("two_point", (a1, b, a2, d), moved)

    return bad
