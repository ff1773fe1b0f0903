"""Ground sets, subset masks, families, and Venn-region decomposition.

A subset of the ground set [k] = {1, ..., k} is stored as a plain machine
integer: element i is present iff bit (i - 1) is set.  All higher layers
(splitting verification, splitter counting, the splitting game) work on
these masks, so k is capped at 64 to keep every subset in one word.
Formula-based counting does not materialise masks and has no such cap.

A family is an ordered list of member masks over a common ground set.
The 2**n Venn regions of an n-set family are indexed by a bitmask I over
the member sets: region I holds the elements lying in exactly the members
named by I (index 0 is the outside region).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_GROUND = 64

# Venn-region counts are materialised as dense 2**n tables.
MAX_VENN_SETS = 16


class CapacityError(ValueError):
    """Input is legal but exceeds a documented search/representation cap."""


def mask_of(elements: Iterable[int], k: int | None = None) -> int:
    """Pack 1-based elements into a bit mask (element i -> bit i-1)."""
    m = 0
    for e in elements:
        if e < 1 or (k is not None and e > k):
            raise ValueError(f"element {e} outside ground set")
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    """Unpack a mask into its sorted 1-based elements."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def splits(a: int, b: int) -> bool:
    """True iff the set a splits the set b.

    a splits b when |a & b| equals |b|/2, rounding either way for odd |b|.
    Both rounding cases collapse to |2*|a&b| - |b|| <= 1.  The empty set is
    split by everything.  Both masks must live on the same ground set; that
    contract is enforced where masks are built, not here.
    """
    return abs(2 * (a & b).bit_count() - b.bit_count()) <= 1


def split_window(size: int) -> tuple[int, int]:
    """Admissible |a & b| range (lo, hi) for splitting a set of this size."""
    return size // 2, (size + 1) // 2


@dataclass(frozen=True)
class Family:
    """An ordered family of subsets of [k], duplicates permitted.

    Doubles as a splitting-family candidate, a splittable family, and a
    game board.  k = 0 is legal (the empty ground set) so that degenerate
    census boards are representable.
    """

    k: int
    sets: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.k <= MAX_GROUND:
            raise ValueError(f"ground-set size {self.k} outside 0..{MAX_GROUND}")
        full = (1 << self.k) - 1
        for s in self.sets:
            if s & ~full:
                raise ValueError(f"member {s:#x} has elements above k={self.k}")

    @classmethod
    def from_sets(cls, k: int, sets: Iterable[Iterable[int]]) -> "Family":
        return cls(k, tuple(mask_of(s, k) for s in sets))

    @property
    def n(self) -> int:
        return len(self.sets)

    @property
    def full_mask(self) -> int:
        return (1 << self.k) - 1

    def member_elements(self) -> list[tuple[int, ...]]:
        return [elements_of(s) for s in self.sets]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        body = ", ".join("{" + ",".join(map(str, elements_of(s))) + "}" for s in self.sets)
        return f"Family(k={self.k}, [{body}])"


@dataclass(frozen=True)
class RegionVector:
    """Sizes of all 2**n Venn regions of an n-set family, bitmask-indexed."""

    n: int
    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.sizes) != 1 << self.n:
            raise ValueError("sizes must have length 2**n")
        if any(s < 0 for s in self.sizes):
            raise ValueError("region sizes must be nonnegative")

    @property
    def k(self) -> int:
        return sum(self.sizes)

    def member_size(self, i: int) -> int:
        """Size of member set i (1-based): total of regions containing it."""
        bit = 1 << (i - 1)
        return sum(s for idx, s in enumerate(self.sizes) if idx & bit)

    def reduced(self) -> "RegionVector":
        """Replace every region size by its parity."""
        return RegionVector(self.n, tuple(s & 1 for s in self.sizes))


@dataclass(frozen=True)
class Venn:
    """Venn decomposition: region sizes plus the element mask per region."""

    vector: RegionVector
    masks: tuple[int, ...]


@dataclass(frozen=True)
class Arrangement2:
    """The two-set arrangement (a1, b, a2, d).

    a1 = |B1 \\ B2|, b = |B1 & B2|, a2 = |B2 \\ B1|, d = outside count.
    t1/t2 are the target intersection counts for a splitter when the member
    sizes are even.
    """

    a1: int
    b: int
    a2: int
    d: int = 0

    def __post_init__(self) -> None:
        if min(self.a1, self.b, self.a2, self.d) < 0:
            raise ValueError("arrangement entries must be nonnegative")

    @property
    def k(self) -> int:
        return self.a1 + self.b + self.a2 + self.d

    @property
    def t1(self) -> int:
        return (self.a1 + self.b) // 2

    @property
    def t2(self) -> int:
        return (self.a2 + self.b) // 2

    def region_vector(self) -> RegionVector:
        return RegionVector(2, (self.d, self.a1, self.a2, self.b))


def venn_decompose(family: Family) -> Venn:
    """Partition [k] into the 2**n Venn regions of the family."""
    n = family.n
    if n > MAX_VENN_SETS:
        raise CapacityError(f"{n} sets exceed the 2**{MAX_VENN_SETS}-region cap")
    masks = [0] * (1 << n)
    for e in range(family.k):
        bit = 1 << e
        idx = 0
        for i, member in enumerate(family.sets):
            if member & bit:
                idx |= 1 << i
        masks[idx] |= bit
    sizes = tuple(m.bit_count() for m in masks)
    return Venn(RegionVector(n, sizes), tuple(masks))


def region_layout(n: int) -> tuple[int, ...]:
    """Region order used for canonical element placement.

    Binary-reflected Gray-code order of the region indices, with the
    outside region (index 0) moved to the end, so that neighbouring
    regions in the layout differ in one member set.
    """
    gray = [i ^ (i >> 1) for i in range(1 << n)]
    return tuple(g for g in gray if g) + (0,)


def family_from_regions(regions: RegionVector) -> Family:
    """Deterministic inverse of venn_decompose.

    Elements 1..k are dealt out region by region following region_layout,
    so equal region vectors always rebuild the identical family.
    """
    k = regions.k
    if k > MAX_GROUND:
        raise CapacityError(f"total size {k} exceeds ground cap {MAX_GROUND}")
    n = regions.n
    members = [0] * n
    next_elem = 0
    for idx in region_layout(n):
        size = regions.sizes[idx]
        if not size:
            continue
        block = ((1 << size) - 1) << next_elem
        next_elem += size
        for i in range(n):
            if idx & (1 << i):
                members[i] |= block
    return Family(k, tuple(members))
