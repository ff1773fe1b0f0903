"""Splitter counting: closed forms, convolution, minima, and lemma sweeps."""

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from setsplit.core import Arrangement2, Family, RegionVector, family_from_regions
from setsplit.counting import (
    approx_splitters_two_set,
    check_three_set_recurrence,
    count_splitters,
    count_splitters_regions,
    franel,
    min_one_set,
    min_three_set,
    min_two_set,
    min_two_set_reference,
    splitters_one_set,
    splitters_two_set,
    three_set_reference_pattern,
    verify_point_moving_lemmas,
)


def _count_splitters_slow(family):
    """Reference implementation: plain loop over every candidate."""
    total = 0
    for a in range(1 << family.k):
        if all(abs(2 * (a & m).bit_count() - m.bit_count()) <= 1 for m in family.sets):
            total += 1
    return total


def test_count_splitters_examples():
    assert count_splitters(Family.from_sets(2, [[1, 2]])) == 2
    assert count_splitters(Family.from_sets(3, [[1, 2, 3]])) == 6
    assert count_splitters(Family(5, ())) == 32


def test_count_splitters_matches_plain_loop():
    rng = random.Random(11)
    for _ in range(60):
        k = rng.randint(0, 8)
        fam = Family(k, tuple(rng.randrange(1 << k) for _ in range(rng.randint(0, 4))))
        assert count_splitters(fam) == _count_splitters_slow(fam)


@given(st.integers(1, 10), st.data())
@settings(max_examples=60, deadline=None)
def test_counts_are_even(k, data):
    # complements pair up splitters, and A == complement(A) is impossible
    sets = data.draw(st.lists(st.integers(0, (1 << k) - 1), max_size=4))
    assert count_splitters(Family(k, tuple(sets))) % 2 == 0


def test_one_set_formula():
    assert splitters_one_set(4, 4) == 6
    assert splitters_one_set(3, 3) == 6
    assert splitters_one_set(0, 7) == 128
    for k in range(0, 11):
        for b in range(k + 1):
            fam = Family(k, ((1 << b) - 1,))
            assert splitters_one_set(b, k) == count_splitters(fam)


def test_min_one_set():
    r4 = min_one_set(4)
    assert r4.count == 6 and r4.arrangement.sizes == (0, 4)
    r5 = min_one_set(5)
    assert r5.count == 12 and r5.arrangement.sizes == (1, 4)
    r1 = min_one_set(1)
    assert r1.count == 2
    assert {rv.sizes for rv in r1.all_minimizers} == {(1, 0), (0, 1)}


def test_two_set_formula_and_reductions():
    assert splitters_two_set(Arrangement2(2, 2, 2, 0)) == 10
    for d in range(5):
        assert splitters_two_set(Arrangement2(0, 0, 0, d)) == 1 << d
    # odd member size reduces by growing the odd side's private part
    assert splitters_two_set(Arrangement2(1, 2, 2, 0)) == 10


def test_two_set_matches_regions():
    for k in range(0, 15):
        for a1 in range(k + 1):
            for b in range(k - a1 + 1):
                for a2 in range(k - a1 - b + 1):
                    d = k - a1 - b - a2
                    arr = Arrangement2(a1, b, a2, d)
                    assert splitters_two_set(arr) == count_splitters_regions(
                        arr.region_vector()
                    )


def test_franel():
    assert [franel(m) for m in (0, 2, 3, 4)] == [1, 10, 56, 346]
    for m in range(13):
        assert franel(m) == splitters_two_set(Arrangement2(m, m, m, 0))


def test_min_two_set_examples():
    r12 = min_two_set(12)
    assert r12.count == 346
    assert r12.arrangement.sizes == (0, 4, 4, 4)
    r7 = min_two_set(7)
    assert r7.count == 18
    assert any(sorted((s[1], s[3], s[2])) == [1, 3, 3] and s[0] == 0 for s in
               (rv.sizes for rv in r7.all_minimizers))
    r8 = min_two_set(8)
    assert any(sorted((s[1], s[3], s[2])) == [2, 2, 4] and s[0] == 0 for s in
               (rv.sizes for rv in r8.all_minimizers))


def test_min_two_set_matches_reference_up_to_permutation():
    for k in range(3, 16):
        ref = min_two_set_reference(k)
        ref_parts = sorted((ref.a1, ref.b, ref.a2))
        res = min_two_set(k)
        assert res.count == splitters_two_set(ref)
        assert any(
            rv.sizes[0] == 0 and sorted((rv.sizes[1], rv.sizes[3], rv.sizes[2])) == ref_parts
            for rv in res.all_minimizers
        )


def test_approx_two_set():
    approx = approx_splitters_two_set(Arrangement2(4, 4, 4, 0))
    assert math.isclose(approx, 2**13 / (math.pi * math.sqrt(48)))
    assert math.isclose(
        approx_splitters_two_set(Arrangement2(4, 4, 4, 1)), 2 * approx
    )
    with pytest.raises(ValueError):
        approx_splitters_two_set(Arrangement2(0, 0, 0, 3))


def test_approx_error_shrinks():
    errors = []
    for m in (4, 8, 12, 16, 20):
        exact = franel(m)
        approx = approx_splitters_two_set(Arrangement2(m, m, m, 0))
        errors.append(abs(approx - exact) / exact)
    assert errors == sorted(errors, reverse=True)


def test_min_three_set_small():
    r = min_three_set(6)
    assert r.count == 4
    assert r.matches_reference is True
    # the conjectured pattern itself evaluates to the minimum
    pattern = three_set_reference_pattern(6)
    assert count_splitters_regions(pattern) == 4
    for k in (3, 4, 5):
        assert min_three_set(k).count == 2


def test_recurrence_checks():
    table = {6: 4, 7: 6, 8: 12, 9: 18, 10: 36, 11: 54, 12: 108,
             13: 180, 14: 360, 15: 600, 16: 1200}
    assert check_three_set_recurrence(table)
    assert check_three_set_recurrence({6: 4, 7: 6})
    assert not check_three_set_recurrence({k: 4 for k in range(6, 10)})
    with pytest.raises(ValueError):
        check_three_set_recurrence({7: 6, 8: 12})
    with pytest.raises(ValueError):
        check_three_set_recurrence({6: 4, 8: 12})


def test_point_moving_lemmas():
    assert verify_point_moving_lemmas(9) == []
    # permutation invariance instance, both by formula and brute force
    a = splitters_two_set(Arrangement2(2, 4, 2, 0))
    b = splitters_two_set(Arrangement2(4, 2, 2, 0))
    assert a == b == count_splitters(family_from_regions(Arrangement2(4, 2, 2, 0).region_vector()))
    # two-point rebalancing instance
    assert splitters_two_set(Arrangement2(2, 2, 2, 0)) <= splitters_two_set(
        Arrangement2(0, 2, 4, 0)
    )


def test_regions_convolution_spot_checks():
    # single set, 4 inside and 2 outside: 2**2 * C(4, 2)
    assert count_splitters_regions(RegionVector(1, (2, 4))) == 24
    assert count_splitters_regions(RegionVector(2, (0, 1, 1, 1))) == 2
    # the k=6 three-set minimum pattern
    assert count_splitters_regions(three_set_reference_pattern(6)) == 4


@pytest.mark.long
def test_min_three_set_long_range():
    expected = {17: 2000, 18: 4000, 19: 7000, 20: 14000}
    counts = {k: min_three_set(k).count for k in range(6, 17)}
    for k, value in expected.items():
        res = min_three_set(k)
        assert res.count == value, (k, res.count)
        assert res.matches_reference, k
        counts[k] = res.count
    assert check_three_set_recurrence(counts)
