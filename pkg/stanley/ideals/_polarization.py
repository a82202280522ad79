from typing import Iterable, Optional

from stanley.exceptions import AmbientMismatchError
from stanley.ideals._ideal import SqfIdeal
from stanley.ideals._monomial import GenMonomial

__all__ = ["polarize", "polarization_slots"]


def polarization_slots(
    monomials: Iterable[GenMonomial], n: Optional[int] = None
) -> list[tuple[int, int]]:
    """
    Labels :code:`(i, j)` of the polarized variables, in the order they are
    numbered: :math:`x_{i,j}` becomes variable :code:`k + 1` for the
    :code:`k`-th label. Variables that never occur get no slot.
    """
    monomials = list(monomials)
    ambient = _ambient(monomials, n)
    slots = []
    for i in range(ambient):
        top = max((m.exponents[i] for m in monomials), default=0)
        slots.extend((i + 1, j) for j in range(1, top + 1))
    return slots


def polarize(monomials: Iterable[GenMonomial], n: Optional[int] = None) -> SqfIdeal:
    """
    Polarization of the monomial ideal minimally generated by :code:`monomials`.

    Each :math:`x_i^k` is replaced by :math:`x_{i,1} x_{i,2} \\cdots x_{i,k}`; the
    new ring has one variable per slot of :func:`polarization_slots`.

    Example:
        The polarization of :math:`(x_1^2, x_1 x_2)`::

            polarize([GenMonomial(2, (2, 0)), GenMonomial(2, (1, 1))])
            # (x1x2, x1x3) on 3 variables: x1 = x_{1,1}, x2 = x_{1,2}, x3 = x_{2,1}
    """
    monomials = list(monomials)
    slots = polarization_slots(monomials, n)
    position = {slot: k for k, slot in enumerate(slots)}
    masks = set()
    for monomial in monomials:
        mask = 0
        for i, exponent in enumerate(monomial.exponents):
            for j in range(1, exponent + 1):
                mask |= 1 << position[(i + 1, j)]
        masks.add(mask)
    return SqfIdeal(len(slots), frozenset(masks))


def _ambient(monomials: list[GenMonomial], n: Optional[int]) -> int:
    ambient = n if n is not None else (monomials[0].n if monomials else 0)
    for monomial in monomials:
        if monomial.n != ambient:
            raise AmbientMismatchError(ambient, monomial.n)
    return ambient
