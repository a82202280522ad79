from stanley.schmitt_vogel._witness import (
    SvCheck,
    SvWitness,
    check_sv_witness,
    pair_product,
)
from stanley.schmitt_vogel._solver import SvResult, sv_number
from stanley.schmitt_vogel._transport import transport_eliminate, transport_localize

__all__ = [
    "SvCheck",
    "SvWitness",
    "check_sv_witness",
    "pair_product",
    "SvResult",
    "sv_number",
    "transport_eliminate",
    "transport_localize",
]
