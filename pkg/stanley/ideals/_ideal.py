from dataclasses import dataclass
from typing import Iterable, Optional

from stanley._bits import bit, indices_of, is_subset, minimal_masks, popcount, sort_key
from stanley.exceptions import AmbientMismatchError
from stanley.ideals._monomial import MonomialPrime, SqfMonomial, check_variable

__all__ = [
    "SqfIdeal",
    "minimalize",
    "colon_by_variable",
    "eliminate_variable",
    "monomial_localization",
    "support",
    "require_active",
]


@dataclass(frozen=True)
class SqfIdeal:
    """
    A squarefree monomial ideal given by its minimal generators :math:`G(I)`.

    The zero ideal has no generators; the unit ideal has the single generator
    with empty support. Membership in :math:`Mon(I)` is divisibility by some
    generator, see :meth:`contains`.
    """

    n: int
    masks: frozenset[int]

    def __post_init__(self):
        for mask in self.masks:
            SqfMonomial(self.n, mask)
        ordered = sorted(self.masks, key=popcount)
        for pos, small in enumerate(ordered):
            for large in ordered[pos + 1 :]:
                if is_subset(small, large):
                    raise ValueError(
                        "Generators must form an antichain: "
                        f"{SqfMonomial(self.n, small)} divides "
                        f"{SqfMonomial(self.n, large)}"
                    )

    @classmethod
    def from_supports(cls, n: int, supports: Iterable[Iterable[int]]) -> "SqfIdeal":
        return cls(n, frozenset(SqfMonomial.from_indices(n, s).mask for s in supports))

    @classmethod
    def zero(cls, n: int) -> "SqfIdeal":
        return cls(n, frozenset())

    @classmethod
    def unit(cls, n: int) -> "SqfIdeal":
        return cls(n, frozenset([0]))

    @classmethod
    def maximal(cls, n: int) -> "SqfIdeal":
        return cls(n, frozenset(bit(i) for i in range(1, n + 1)))

    @property
    def generators(self) -> frozenset[SqfMonomial]:
        return frozenset(SqfMonomial(self.n, mask) for mask in self.masks)

    def sorted_masks(self) -> list[int]:
        return sorted(self.masks, key=sort_key)

    def sorted_generators(self) -> list[SqfMonomial]:
        return [SqfMonomial(self.n, mask) for mask in self.sorted_masks()]

    @property
    def is_zero(self) -> bool:
        return not self.masks

    @property
    def is_unit(self) -> bool:
        return 0 in self.masks

    @property
    def is_principal(self) -> bool:
        return len(self.masks) == 1

    @property
    def support_mask(self) -> int:
        union = 0
        for mask in self.masks:
            union |= mask
        return union

    def contains_mask(self, mask: int) -> bool:
        return any(is_subset(g, mask) for g in self.masks)

    def contains(self, monomial: SqfMonomial) -> bool:
        if monomial.n != self.n:
            raise AmbientMismatchError(self.n, monomial.n)
        return self.contains_mask(monomial.mask)

    def supports(self) -> list[list[int]]:
        return [list(g.indices) for g in self.sorted_generators()]

    def __len__(self) -> int:
        return len(self.masks)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return "(" + ", ".join(str(g) for g in self.sorted_generators()) + ")"


def _from_masks(n: int, masks: Iterable[int]) -> SqfIdeal:
    return SqfIdeal(n, minimal_masks(masks))


def minimalize(
    monomials: Iterable[SqfMonomial], n: Optional[int] = None
) -> SqfIdeal:
    """
    Keep the divisibility-minimal elements of :code:`monomials`.

    Args:
        monomials: squarefree monomials sharing one ambient ring.
        n: ambient variable count; required only when :code:`monomials` is empty.

    Raises:
        AmbientMismatchError: the monomials disagree on the ambient ring.
    """
    monomials = list(monomials)
    ambient = n if n is not None else (monomials[0].n if monomials else None)
    if ambient is None:
        raise ValueError("The ambient variable count of an empty family is unknown")
    for monomial in monomials:
        if monomial.n != ambient:
            raise AmbientMismatchError(ambient, monomial.n)
    return _from_masks(ambient, (m.mask for m in monomials))


def colon_by_variable(ideal: SqfIdeal, i: int) -> SqfIdeal:
    """The colon ideal :math:`(I : x_i)`."""
    check_variable(i, ideal.n)
    without = ~bit(i)
    return _from_masks(ideal.n, (mask & without for mask in ideal.masks))


def eliminate_variable(ideal: SqfIdeal, i: int) -> SqfIdeal:
    """
    The ideal :math:`I \\cap S'` generated by the generators avoiding :math:`x_i`.

    The ambient index space is kept; variable :code:`i` is simply unused.
    """
    check_variable(i, ideal.n)
    var = bit(i)
    return SqfIdeal(ideal.n, frozenset(m for m in ideal.masks if not m & var))


def monomial_localization(ideal: SqfIdeal, prime: MonomialPrime) -> SqfIdeal:
    """Image of :math:`I` under :math:`x_i \\mapsto 1` for the prime's variables."""
    if prime.n != ideal.n:
        raise AmbientMismatchError(ideal.n, prime.n)
    kept = ~prime.mask
    return _from_masks(ideal.n, (mask & kept for mask in ideal.masks))


def support(monomial: SqfMonomial) -> frozenset[int]:
    return monomial.support_set


def require_active(ideal: SqfIdeal, active: int) -> None:
    """Raise unless every generator lives on the active variables."""
    stray = ideal.support_mask & ~active
    if stray:
        raise ValueError(
            f"Generators of {ideal} use inactive variables {list(indices_of(stray))}"
        )
