__all__ = [
    "SqfMonomial",
    "GenMonomial",
    "MonomialPrime",
    "SqfIdeal",
    "minimalize",
    "colon_by_variable",
    "eliminate_variable",
    "monomial_localization",
    "polarize",
    "polarization_slots",
    "support",
    "require_active",
    "check_variable",
]

from stanley.ideals._monomial import (
    SqfMonomial,
    GenMonomial,
    MonomialPrime,
    check_variable,
)
from stanley.ideals._ideal import (
    SqfIdeal,
    minimalize,
    colon_by_variable,
    eliminate_variable,
    monomial_localization,
    support,
    require_active,
)
from stanley.ideals._polarization import polarize, polarization_slots
