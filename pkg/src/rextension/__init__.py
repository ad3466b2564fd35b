"""Multisequence R-extensions over prime fields.

Synthesis of multisequences whose R-extensions have maximum dimension,
word-based LFSR design from such multisequences, exact counting formulas and
exhaustive oracles that recheck them.
"""

__version__ = "0.1.0"

from .gf import (
    FieldElement,
    Poly,
    PrimeField,
    companion_matrix,
    find_primitive,
    is_irreducible,
    is_primitive,
    order,
    parse_poly,
    primitive_polys,
)
from .linalg import Mat, charpoly, inverse, rank, solve_left
from .multiseq import (
    MultiseqState,
    RVector,
    canonical_state,
    dimension,
    extension_dimension,
    extension_state,
    minimal_poly_oracle,
    step,
)
from .rroad import active_coordinate, backward_traverse, phi, road
from .synthesis import ChoiceScript, PolyLadder, find_f, lift, random_choices, realign, synthesize
from .lfsr import (
    LfsrSpec,
    MCompanion,
    feedback_blocks,
    lfsr_step,
    period,
    stacked_state,
    transition_from_multiseq,
    verify_lfsr,
)
from .hankel import HankelVec, count_fullrank_hankel, enumerate_fullrank_hankel, fullrank_via_extension, hankel_from_vector
from .counting import (
    CountReport,
    count_by_dimension,
    count_independent,
    count_lfsr,
    count_max_extension,
    count_Nr,
    grassmannian_size,
    oracle_by_dimension,
    oracle_lfsr,
    oracle_max_extension,
)
