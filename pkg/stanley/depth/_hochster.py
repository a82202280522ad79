import logging
from dataclasses import dataclass
from typing import Optional

from stanley._bits import popcount, submasks
from stanley.config import Limits
from stanley.depth._complex import stanley_reisner
from stanley.depth._homology import reduced_homology_ranks
from stanley.exceptions import ZeroIdealError
from stanley.ideals import SqfIdeal

__all__ = [
    "ProjectiveDimension",
    "projective_dimension",
    "depth_quotient",
    "depth_ideal",
    "torsion_check",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProjectiveDimension:
    """
    :math:`\\mathrm{pd}(S/I)` together with a subset :code:`sigma` attaining it:
    the induced subcomplex on :code:`sigma` has nonzero reduced homology in
    dimension :code:`homology_dimension`.
    """

    value: int
    sigma: int
    homology_dimension: int


def projective_dimension(
    ideal: SqfIdeal, *, limits: Optional[Limits] = None
) -> ProjectiveDimension:
    """
    Hochster's formula, swept over subsets of the union of the generator
    supports. A vertex outside that union is a cone point of every induced
    subcomplex containing it, so larger subsets contribute nothing.

    Raises:
        UnitIdealError: :code:`ideal` is the unit ideal.
        CapExceededError: the support union exceeds :code:`limits.hochster_max_m`.
    """
    limits = limits or Limits.default()
    complex_ = stanley_reisner(ideal)
    support = ideal.support_mask
    limits.require("hochster_max_m", popcount(support))

    best = ProjectiveDimension(0, 0, -1)
    for sigma in submasks(support):
        size = popcount(sigma)
        if size <= best.value:
            continue
        ranks = reduced_homology_ranks(complex_, sigma, limits.field, limits.prime)
        for position, rank in enumerate(ranks):
            # a nonzero rank at position k + 1 contributes |sigma| - k - 1
            if rank and size - position > best.value:
                best = ProjectiveDimension(size - position, sigma, position - 1)
                break
    logger.debug("pd(S/%s) = %d at sigma=%s", ideal, best.value, bin(best.sigma))
    return best


def depth_quotient(
    ideal: SqfIdeal, m: Optional[int] = None, *, limits: Optional[Limits] = None
) -> int:
    """
    :math:`\\mathrm{depth}(S/I) = m - \\mathrm{pd}(S/I)` over :code:`m` active
    variables (default: the ambient :code:`n`). The zero ideal gives :code:`m`.

    Raises:
        UnitIdealError: :code:`ideal` is the unit ideal.
        ValueError: :code:`m` is smaller than the number of variables in use.
    """
    m = ideal.n if m is None else m
    used = popcount(ideal.support_mask)
    if m < used:
        raise ValueError(f"{m} active variables cannot carry {used} used ones")
    return m - projective_dimension(ideal, limits=limits).value


def depth_ideal(
    ideal: SqfIdeal, m: Optional[int] = None, *, limits: Optional[Limits] = None
) -> int:
    if ideal.is_zero:
        raise ZeroIdealError("depth_ideal")
    return depth_quotient(ideal, m, limits=limits) + 1


def torsion_check(ideal: SqfIdeal, *, limits: Optional[Limits] = None) -> bool:
    """
    Compare :math:`\\mathrm{pd}(S/I)` over :math:`\\mathbb{Q}` and over
    :math:`\\mathbb{F}_p`. A disagreement is logged as a warning and reported
    as False.
    """
    limits = limits or Limits.default()
    rational = projective_dimension(
        ideal, limits=limits.model_copy(update={"field": "Q"})
    )
    modular = projective_dimension(
        ideal, limits=limits.model_copy(update={"field": "Fp"})
    )
    if rational.value != modular.value:
        logger.warning(
            "torsion: pd(S/%s) is %d over Q but %d over GF(%d)",
            ideal,
            rational.value,
            modular.value,
            limits.prime,
        )
        return False
    return True
