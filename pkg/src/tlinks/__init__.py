"""Lorenz links, T-links and their braids, with a Jones-polynomial oracle."""

from .braidcore import (
    BraidWord,
    PDCode,
    Permutation,
    closure_pd,
    component_count,
    delta_power,
    destabilize,
    parse_braid_text,
    torus_block,
    underlying_permutation,
)
from .laurent import LaurentPoly
from .lorenz import (
    CodeWordSet,
    LorenzPermutation,
    LorenzVector,
    code_words_from_permutation,
    lorenz_braid,
    parse_code_words,
    parse_vector,
    permutation_braid,
    permutation_from_code_words,
    permutation_from_vector,
    trip_number,
    trip_number_of_vector,
    vector_from_permutation,
)
from .oracle import CrossingLimitExceeded, equivalence_evidence, jones_normalized, kauffman_bracket
from .tlink import (
    GenTLinkParams,
    TLinkParams,
    TnLinkParams,
    TrivialDescriptor,
    alt_trip_family,
    associated_lorenz,
    gen_tlink_braid,
    gen_to_tn,
    lorenz_like_to_tn,
    prop2_normalize,
    tlink_braid,
    tn_link_braid,
    tn_to_gen,
)
from .volume import V_TET, bound_from_trip, bound_gen_tlink, bound_manifold, parent_crossings

__version__ = "0.1.0"
