#!/usr/bin/env python3
"""Counting splitters exactly: formulas, sweeps, and minimum arrangements.

A family is splittable when one set splits all of its members at once.
This script counts such common splitters three ways (brute force, closed
forms, region convolution), then hunts the arrangements with the fewest
splitters for one, two, and three member sets.
"""

from fractions import Fraction

from setsplit import (
    Arrangement2,
    Family,
    RegionVector,
    approx_splitters_two_set,
    check_three_set_recurrence,
    count_splitters,
    count_splitters_regions,
    family_from_regions,
    franel,
    min_one_set,
    min_three_set,
    min_two_set,
    min_two_set_reference,
    splitters_one_set,
    splitters_two_set,
    verify_point_moving_lemmas,
)


def banner(title):
    print(f"\n=== {title} ===")


banner("Three routes to the same count")
arr = Arrangement2(2, 2, 2, 0)
fam = family_from_regions(arr.region_vector())
print("family:", fam.member_elements())
print("brute force over all subsets:", count_splitters(fam))
print("two-set closed form:         ", splitters_two_set(arr))
print("region convolution:          ", count_splitters_regions(arr.region_vector()))

banner("One member set: the minimum sits at full (or almost full) size")
for k in (4, 5, 12):
    res = min_one_set(k)
    outside, inside = res.arrangement.sizes
    print(f"k={k}: min {res.count} at |B|={inside} (formula at |B|=k: "
          f"{splitters_one_set(k, k)})")

banner("Two member sets: thirds of the ground set")
for k in (7, 8, 12, 15):
    res = min_two_set(k)
    ref = min_two_set_reference(k)
    print(f"k={k}: min {res.count}, minimizers {[rv.sizes for rv in res.all_minimizers]}"
          f"  (predicted shape ({ref.a1},{ref.b},{ref.a2},0))")
print("balanced arrangements count cube sums:",
      [(m, franel(m)) for m in (2, 3, 4)])

banner("How good is the closed-form estimate?")
for m in (4, 8, 16):
    exact = franel(m)
    approx = approx_splitters_two_set(Arrangement2(m, m, m, 0))
    print(f"(m,m,m,0) with m={m}: exact {exact}, estimate {approx:.1f}, "
          f"rel. error {abs(approx - exact) / exact:.4f}")

banner("Three member sets: exact minima and the ratio law")
counts = {}
for k in range(6, 17):
    res = min_three_set(k)
    counts[k] = res.count
    print(f"k={k}: min {res.count}  pattern-of-k-mod-6 among minimizers: "
          f"{res.matches_reference}")
print("consecutive ratios:",
      [f"{k + 1}/{k}: {Fraction(counts[k + 1], counts[k])}" for k in range(6, 16)])
print("ratio law holds exactly:", check_three_set_recurrence(counts))

banner("Rebalancing never increases the count (exhaustive to k=12)")
for k in (6, 9, 12):
    print(f"k={k}: violations = {len(verify_point_moving_lemmas(k))}")
