from stanley.sdepth._poset import (
    CharPoset,
    PosetKind,
    active_mask,
    build_poset,
    char_poset,
    interval_inside,
)
from stanley.sdepth._partition import Interval, IntervalPartition, interval_members
from stanley.sdepth._solver import SdepthResult, decide_sdepth, sdepth, sdepth_of_poset
from stanley.sdepth._split import Split, combine_split, split_ideal, split_quotient

__all__ = [
    "CharPoset",
    "PosetKind",
    "active_mask",
    "build_poset",
    "char_poset",
    "interval_inside",
    "Interval",
    "IntervalPartition",
    "interval_members",
    "SdepthResult",
    "decide_sdepth",
    "sdepth",
    "sdepth_of_poset",
    "Split",
    "combine_split",
    "split_ideal",
    "split_quotient",
]
