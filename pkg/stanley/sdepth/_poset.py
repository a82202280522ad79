from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from stanley._bits import full_mask, indices_of, is_subset, popcount, submasks
from stanley.exceptions import UnitIdealError, ZeroIdealError
from stanley.ideals import SqfIdeal, require_active

__all__ = [
    "PosetKind",
    "CharPoset",
    "char_poset",
    "build_poset",
    "active_mask",
    "interval_inside",
]


class PosetKind(str, Enum):
    IDEAL = "ideal"
    QUOTIENT = "quotient"


@dataclass(frozen=True)
class CharPoset:
    """
    The characteristic poset of :math:`I` or :math:`S/I` on the active variables.

    For :code:`IDEAL` the ground set holds the :math:`\\sigma` with
    :math:`x_\\sigma \\in I` and is closed upwards; for :code:`QUOTIENT` it holds
    the faces of the Stanley-Reisner complex and is closed downwards.
    """

    kind: PosetKind
    active: int
    ground: tuple[int, ...]

    members: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.ground))

    def __contains__(self, sigma: object) -> bool:
        return sigma in self.members

    @property
    def m(self) -> int:
        return popcount(self.active)

    def __len__(self) -> int:
        return len(self.ground)


def active_mask(ideal: SqfIdeal, m: Optional[int] = None) -> int:
    """
    The variable set of a ring with :code:`m` active variables carrying
    :code:`ideal`: the generator supports plus the lowest unused indices as free
    variables. With :code:`m` omitted, every ambient variable is active.
    """
    if m is None:
        return full_mask(ideal.n)
    mask = ideal.support_mask
    if m < popcount(mask):
        raise ValueError(
            f"{m} active variables cannot carry the {popcount(mask)} used by {ideal}"
        )
    free = 1
    while popcount(mask) < m:
        mask |= free
        free <<= 1
    return mask


def _ground(ideal: SqfIdeal, kind: PosetKind, active: int) -> tuple[int, ...]:
    if kind is PosetKind.IDEAL:
        members = [s for s in submasks(active) if ideal.contains_mask(s)]
    else:
        members = [s for s in submasks(active) if not ideal.contains_mask(s)]
    return tuple(sorted(members, key=lambda s: (popcount(s), indices_of(s))))


def build_poset(ideal: SqfIdeal, kind: PosetKind, active: int) -> CharPoset:
    """:func:`char_poset` without the proper/nonzero checks; the ground may be empty."""
    require_active(ideal, active)
    return CharPoset(kind, active, _ground(ideal, kind, active))


def char_poset(
    ideal: SqfIdeal, kind: "PosetKind | str", active: Optional[int] = None
) -> CharPoset:
    """
    Materialize the characteristic poset of :code:`ideal` (:code:`kind="ideal"`)
    or of :math:`S/I` (:code:`kind="quotient"`).

    Raises:
        UnitIdealError: :code:`ideal` is the unit ideal.
        ZeroIdealError: :code:`kind` is :code:`"ideal"` and :code:`ideal` is zero.
        ValueError: some generator uses an inactive variable.
    """
    kind = PosetKind(kind)
    if ideal.is_unit:
        raise UnitIdealError("char_poset")
    if kind is PosetKind.IDEAL and ideal.is_zero:
        raise ZeroIdealError("char_poset")
    return build_poset(ideal, kind, full_mask(ideal.n) if active is None else active)


def interval_inside(poset: CharPoset, sigma: int, tau: int) -> bool:
    """Whether :math:`[\\sigma, \\tau]` lies in the ground set, by closure."""
    if not is_subset(sigma, tau) or not is_subset(tau, poset.active):
        return False
    if poset.kind is PosetKind.IDEAL:
        return sigma in poset
    return tau in poset
