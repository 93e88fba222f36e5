"""Exact reliability analysis of q-ary MDS codes under bounded-distance
reproducing decoding: split-weight enumerators, sphere counts, and the
word/symbol/information-bit probabilities of the six decoding events,
verified against built-in brute-force and Monte Carlo oracles."""
from .combinatorics import binom, identity_suite, int_pow
from .enumerator import (CodeParams, IrweTable, irwe_closed,
                         irwe_inclusion_exclusion, pwe_two_block,
                         totally_nonzero_closed, totally_nonzero_recursive,
                         weight_distribution)
from .rates import (ChannelPoint, EventRates, channel_from_ps, curve,
                    derive_channel, event_budget, p_fn, p_fp, p_ped, p_wc,
                    trivial_rates)
from .sphere import (SphereStats, SplitWeight, ball_volume,
                     decoder_change_stats, sphere_count, sphere_count_cases)
from .tables import CodeTables, FormulaInconsistencyError, get_tables

__version__ = "0.1.0"
__all__ = [
    "binom", "identity_suite", "int_pow",
    "CodeParams", "IrweTable", "irwe_closed", "irwe_inclusion_exclusion",
    "pwe_two_block", "totally_nonzero_closed", "totally_nonzero_recursive",
    "weight_distribution",
    "ChannelPoint", "EventRates", "channel_from_ps", "curve", "derive_channel",
    "event_budget", "p_fn", "p_fp", "p_ped", "p_wc", "trivial_rates",
    "SphereStats", "SplitWeight", "ball_volume", "decoder_change_stats",
    "sphere_count", "sphere_count_cases",
    "CodeTables", "FormulaInconsistencyError", "get_tables",
    "__version__",
]
