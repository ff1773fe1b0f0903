"""Masks, the split predicate, and Venn-region plumbing."""

import itertools

import pytest
from hypothesis import given, strategies as st

from setsplit.core import (
    Arrangement2,
    Family,
    RegionVector,
    elements_of,
    family_from_regions,
    mask_of,
    splits,
    venn_decompose,
)


def test_splits_basic_cases():
    assert splits(0, 0)
    assert splits(mask_of([1, 2]), mask_of([1, 2, 3, 4]))
    assert not splits(mask_of([1, 2, 3]), mask_of([1, 2, 3, 4]))
    assert splits(mask_of([1]), mask_of([1, 2, 3]))
    assert not splits(0, mask_of([1, 2, 3]))
    # empty target is split by anything
    assert splits(mask_of([3, 5]), 0)


@given(st.integers(0, 2**12 - 1), st.integers(0, 2**12 - 1))
def test_splits_complement_symmetric(a, b):
    k = 12
    assert splits(a, b) == splits(~a & ((1 << k) - 1), b)


@given(st.integers(0, 2**12 - 1), st.integers(0, 2**12 - 1))
def test_splits_depends_on_intersection_only(a, b):
    assert splits(a, b) == splits(a & b, b)


def test_family_validation():
    with pytest.raises(ValueError):
        Family(3, (0b1000,))  # element 4 above k=3
    with pytest.raises(ValueError):
        Family(65, ())
    with pytest.raises(ValueError):
        Arrangement2(1, -1, 0, 0)
    with pytest.raises(ValueError):
        mask_of([0])


def test_venn_decompose_two_sets():
    fam = Family.from_sets(3, [[1, 2], [2, 3]])
    venn = venn_decompose(fam)
    # index order: outside, {1}, {2}, {1,2}
    assert venn.vector.sizes == (0, 1, 1, 1)
    assert venn.masks == (0, mask_of([1]), mask_of([3]), mask_of([2]))


def test_venn_decompose_empty_family():
    venn = venn_decompose(Family(5, ()))
    assert venn.vector.sizes == (5,)
    assert venn.masks == (mask_of([1, 2, 3, 4, 5]),)


def test_venn_decompose_eight_distinct_regions():
    # every element of this family sits in its own region; 8 is outside
    fam = Family.from_sets(8, [[1, 2, 3, 4], [1, 2, 5, 6], [3, 4, 5, 6], [1, 3, 5, 7]])
    venn = venn_decompose(fam)
    assert venn.masks[0] == mask_of([8])
    assert sorted(venn.vector.sizes) == [0] * 8 + [1] * 8
    assert sum(venn.vector.sizes) == 8


def test_family_from_regions_layout():
    fam = family_from_regions(RegionVector(2, (0, 1, 1, 1)))
    assert fam.k == 3
    assert fam.member_elements() == [(1, 2), (2, 3)]
    one = family_from_regions(RegionVector(1, (1, 5)))
    assert one.k == 6
    assert one.member_elements() == [(1, 2, 3, 4, 5)]


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@pytest.mark.parametrize("n", [1, 2, 3])
def test_region_roundtrip_exhaustive(n):
    for k in range(0, 9):
        for comp in _compositions(k, 1 << n):
            rv = RegionVector(n, comp)
            assert venn_decompose(family_from_regions(rv)).vector == rv


def test_arrangement_targets():
    arr = Arrangement2(2, 3, 4, 1)
    assert arr.k == 10
    assert (arr.t1, arr.t2) == (2, 3)
    assert arr.region_vector().sizes == (1, 2, 4, 3)


def test_elements_of_roundtrip():
    for elems in ([], [1], [2, 5, 7], list(range(1, 11))):
        assert elements_of(mask_of(elems)) == tuple(elems)


def test_capacity_guards():
    from setsplit.core import CapacityError

    with pytest.raises(CapacityError):
        venn_decompose(Family(2, (1,) * 17))  # too many sets for region tables
    with pytest.raises(CapacityError):
        family_from_regions(RegionVector(1, (40, 30)))  # 70 > 64 elements
