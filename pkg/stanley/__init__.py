__version__ = "0.1.0"

from stanley.config import Limits
from stanley.ideals import GenMonomial, MonomialPrime, SqfIdeal, SqfMonomial, polarize
from stanley.clutters import Clutter, d_complement, edge_ideal, is_chordal
from stanley.depth import depth_ideal, depth_quotient, projective_dimension
from stanley.linear_quotients import check_lq_order, chordal_lq_order, find_lq_order
from stanley.sdepth import IntervalPartition, PosetKind, sdepth
from stanley.schmitt_vogel import SvWitness, check_sv_witness, sv_number

__all__ = [
    "Limits",
    "GenMonomial",
    "MonomialPrime",
    "SqfIdeal",
    "SqfMonomial",
    "polarize",
    "Clutter",
    "d_complement",
    "edge_ideal",
    "is_chordal",
    "depth_ideal",
    "depth_quotient",
    "projective_dimension",
    "check_lq_order",
    "chordal_lq_order",
    "find_lq_order",
    "IntervalPartition",
    "PosetKind",
    "sdepth",
    "SvWitness",
    "check_sv_witness",
    "sv_number",
]
