"""Over-rotation numbers, forcing, and exact orbit realization for cyclic
patterns of interval maps.

A pattern is a cyclic permutation recording how an interval map permutes a
periodic orbit.  This package classifies patterns (over-rotation pair,
division, block structures), decides which patterns a pattern forces by
realizing orbits of its pattern-linear map exactly in rational arithmetic,
and runs exhaustive verification sweeps of the structural claims behind the
forcing order.
"""

from .forcing import (
    AffineComposition,
    Degenerate,
    DegenerateRealizationError,
    LoopError,
    NotTwist,
    Orbit,
    TwistUpTo,
    compose_loop,
    forced_patterns,
    forces,
    insert_rotation,
    is_twist_bounded,
    orp_spectrum,
    pattern_of_orbit,
    realize_loop,
    twist_monotone_check,
)
from .markov import (
    DivergentPatternError,
    Germ,
    MarkovGraph,
    PLinearMap,
    fixed_point,
    fundamental_loop,
    fundamental_loop_pprime,
    germ_map,
    markov_graph,
    p_linear,
)
from .orders import (
    TWO_INFINITY,
    OvrDescriptor,
    eta,
    n_r,
    orp_precedes,
    ovr,
    sh_set,
    sharkovsky_precedes,
    star_precedes,
)
from .patterns import (
    BlockDecomposition,
    OrpPair,
    Pattern,
    PatternError,
    block_structures,
    canonical,
    classify,
    doubling_of,
    flip,
    format_cycle,
    format_pattern,
    has_division,
    is_convergent,
    is_doubling,
    over_rotation_number,
    over_rotation_pair,
    parse_cycle,
    parse_pattern,
    stefan,
)
from .verify import (
    NdNbsReport,
    VerificationReport,
    enumerate_patterns,
    nd_nbs,
    verify_forcing_order,
    verify_lemmas,
    verify_refrem,
    verify_stefan_only,
    verify_trichotomy,
)

__version__ = "0.1.0"

__all__ = [
    "AffineComposition",
    "BlockDecomposition",
    "Degenerate",
    "DegenerateRealizationError",
    "DivergentPatternError",
    "Germ",
    "LoopError",
    "MarkovGraph",
    "NdNbsReport",
    "NotTwist",
    "Orbit",
    "OrpPair",
    "OvrDescriptor",
    "PLinearMap",
    "Pattern",
    "PatternError",
    "TWO_INFINITY",
    "TwistUpTo",
    "VerificationReport",
    "block_structures",
    "canonical",
    "classify",
    "compose_loop",
    "doubling_of",
    "enumerate_patterns",
    "eta",
    "fixed_point",
    "flip",
    "forced_patterns",
    "forces",
    "format_cycle",
    "format_pattern",
    "fundamental_loop",
    "fundamental_loop_pprime",
    "germ_map",
    "has_division",
    "insert_rotation",
    "is_convergent",
    "is_doubling",
    "is_twist_bounded",
    "markov_graph",
    "n_r",
    "nd_nbs",
    "orp_precedes",
    "orp_spectrum",
    "over_rotation_number",
    "over_rotation_pair",
    "ovr",
    "p_linear",
    "parse_cycle",
    "parse_pattern",
    "pattern_of_orbit",
    "realize_loop",
    "sh_set",
    "sharkovsky_precedes",
    "star_precedes",
    "stefan",
    "twist_monotone_check",
    "verify_forcing_order",
    "verify_lemmas",
    "verify_refrem",
    "verify_stefan_only",
    "verify_trichotomy",
]
