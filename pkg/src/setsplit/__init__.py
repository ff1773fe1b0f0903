"""Exact combinatorics and perfect-play solving for set splitting.

A set A splits a set B when |A & B| is |B|/2, rounded either way for odd
|B|.  The package verifies and enumerates splitting families (every subset
of the ground set is split by some member), counts and minimises the
splitters of splittable families, and solves the adversarial splitting
game exactly.
"""

from .core import (
    Arrangement2,
    CapacityError,
    Family,
    RegionVector,
    Venn,
    elements_of,
    family_from_regions,
    mask_of,
    splits,
    venn_decompose,
)
from .counting import (
    MinResult,
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
from .families import (
    FamilyClass,
    HammingRep,
    YWitness,
    canonical_form,
    classify_connected_le4_minimal,
    enumerate_minimal_splitting_families,
    families_equivalent,
    find_forbidden_y,
    find_unsplit_subset,
    hamming_representation,
    is_connected,
    is_extendable,
    is_splitting_family,
    is_t_splitting_family,
    min_t_splitting_size,
    splitting_family_exists,
    standard_family,
)
from .game import (
    CensusResult,
    GameState,
    IllegalMoveError,
    Pairing,
    Player,
    Solution,
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

__version__ = "0.1.0"
