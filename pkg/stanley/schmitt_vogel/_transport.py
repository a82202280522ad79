import logging

from stanley._bits import lowest_index
from stanley.exceptions import (
    AmbientMismatchError,
    InvalidWitnessError,
    UnitIdealError,
    ZeroIdealError,
)
from stanley.ideals import MonomialPrime, SqfIdeal, SqfMonomial
from stanley.schmitt_vogel._witness import SvWitness, check_sv_witness

__all__ = ["transport_localize", "transport_eliminate"]

logger = logging.getLogger(__name__)


def _require_valid(ideal: SqfIdeal, witness: SvWitness) -> None:
    check = check_sv_witness(ideal, witness)
    if not check:
        raise InvalidWitnessError(f"Not a witness for {ideal}: {check.describe()}")


def transport_localize(
    ideal: SqfIdeal, witness: SvWitness, prime: MonomialPrime
) -> SvWitness:
    """
    Push a witness for :math:`I` to one for :math:`I(P)` by setting the variables
    of :code:`prime` to 1. A monomial already met in an earlier level is dropped,
    and so is any level left empty, so the result has at most as many levels.

    Raises:
        InvalidWitnessError: :code:`witness` does not witness :code:`ideal`.
    """
    if prime.n != ideal.n:
        raise AmbientMismatchError(ideal.n, prime.n)
    _require_valid(ideal, witness)
    kept = ~prime.mask
    seen: set[int] = set()
    levels: list[list[int]] = []
    for level in witness.mask_levels():
        image = []
        for mask in level:
            mapped = mask & kept
            if mapped not in seen:
                seen.add(mapped)
                image.append(mapped)
        if image:
            levels.append(image)
    result = SvWitness.from_masks(ideal.n, levels)
    logger.debug(
        "localized %s at %s: %d levels to %d",
        witness,
        SqfMonomial(prime.n, prime.mask),
        witness.r,
        result.r,
    )
    return result


def transport_eliminate(
    ideal: SqfIdeal, witness: SvWitness
) -> tuple[int, SvWitness]:
    """
    Pick the lowest variable :math:`x_i` of the single monomial in :math:`P_1` and
    keep, level by level, the monomials it does not divide. The result witnesses
    :math:`I \\cap S'` with at most :math:`r - 1` levels.

    Raises:
        InvalidWitnessError: :code:`witness` does not witness :code:`ideal`.
        ZeroIdealError: :code:`ideal` is zero.
        UnitIdealError: the first level is the monomial 1.
    """
    if ideal.is_zero:
        raise ZeroIdealError("transport_eliminate")
    _require_valid(ideal, witness)
    (first,) = witness.levels[0]
    if first.mask == 0:
        raise UnitIdealError("transport_eliminate")
    i = lowest_index(first.mask)
    var = first.mask & -first.mask
    levels = [
        [mask for mask in level if not mask & var] for level in witness.mask_levels()
    ]
    result = SvWitness.from_masks(ideal.n, [level for level in levels if level])
    logger.debug("eliminated x%d from %s: %d levels", i, witness, result.r)
    return i, result
