"""Constructions, verification and exhaustive spectra for flat maximal antichains in B_n."""

from .errors import FlatMacError, VerificationFailure
from .setfam import (
    CascadeRep,
    Family,
    cascade_representation,
    catalan_prefix_sum,
    colex_prefix,
    kk_shadow_size,
    overlap_f,
    shade,
    shadow,
    squashed_size,
)
from .verify import FlatAntichain, VerifyReport, assemble_from_upper, check_maximal_flat
from .lift import lift_add_isolated, lift_join_element, lift_pair
from .tgraph import (
    ForestComplementGraph,
    TGraphStats,
    base_case_construct,
    build_starter,
    deletion_sequence,
    phi,
    properly_label,
    tgraph_stats,
    tgraph_to_antichain,
    top_row_construct,
)
from .star import StarPlan, solve_small_target, star_construct, sum_class_family
from .trace import ConstructionTrace, TraceStep
from .planner import (
    Construction,
    SizeInterval,
    construct_in_level,
    construct_large,
    construct_levels12,
    construct_main,
    interval_flat,
    interval_large,
    replay,
)
from .characterize import is_flat_mac_size, is_mac_size, near_top_gap_form
from .oracle import SpectrumResult, enumerate_flat_spectrum, enumerate_tgraph_spectrum

__version__ = "0.1.0"
