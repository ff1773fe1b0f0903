#!/usr/bin/env python3
"""Tour of splitting families: construction, verification, and structure.

A family of subsets of [k] = {1..k} is a splitting family when every
B subseteq [k] has a member A with |A & B| = |B|/2, rounded either way for
odd |B|.  This script builds the interval construction, verifies it by
exhaustive sweep, runs the minimum-size census, and draws the incidence
column graphs that tell the two k=8 minimum families apart.
"""

from setsplit import (
    Family,
    canonical_form,
    elements_of,
    enumerate_minimal_splitting_families,
    find_forbidden_y,
    hamming_representation,
    is_connected,
    is_extendable,
    is_splitting_family,
    splitting_family_exists,
    standard_family,
)


def banner(title):
    print(f"\n=== {title} ===")


banner("The interval construction")
for k in (2, 6, 8, 9):
    fam = standard_family(k)
    print(f"k={k}: {fam.member_elements()}  splitting={is_splitting_family(fam)}")

banner("Nothing smaller works (exhaustive)")
for k in range(1, 11):
    smaller = (k + 1) // 2 - 1
    print(f"k={k}: any splitting family with {smaller} sets? "
          f"{splitting_family_exists(k, smaller)}")

banner("Census of minimum-size families up to equivalence")
for k in range(2, 11):
    classes = enumerate_minimal_splitting_families(k)
    tags = ["interval" if c.standard_equivalent else "exceptional" for c in classes]
    print(f"k={k}: {len(classes)} class(es): {tags}")

banner("The two k=8 families, seen through their incidence columns")
exceptional = Family.from_sets(8, [[1, 2, 3, 4], [1, 2, 5, 6], [3, 4, 5, 6], [1, 3, 5, 7]])
for name, fam in (("interval", standard_family(8)), ("exceptional", exceptional)):
    rep = hamming_representation(fam)
    cols = [set(elements_of(c)) or "{}" for c in rep.columns]
    print(f"{name}: columns (which members contain each element): {cols}")
    print(f"  connected: {is_connected(rep)}   edges: {rep.edges()}")
    print(f"  forbidden claw: {find_forbidden_y(rep)}")

banner("Claw detection on a synthetic star")
from setsplit.families import HammingRep

star = HammingRep(3, (0, 1, 2, 4))
print("columns {}, {1}, {2}, {3} ->", find_forbidden_y(star))

banner("Extendability: which families restrict from one element higher")
for k in (7, 8):
    fam = standard_family(k)
    print(f"interval family on {k}: extendable to {k + 1}? {is_extendable(fam)}")

banner("Equivalence: relabelling and complementing do not matter")
mirrored = Family.from_sets(8, [[5, 6, 7, 8], [4, 5, 6, 7], [3, 4, 5, 6], [2, 3, 4, 5]])
print("mirror image of the interval family is equivalent:",
      canonical_form(mirrored) == canonical_form(standard_family(8)))
