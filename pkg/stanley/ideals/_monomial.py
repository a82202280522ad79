from dataclasses import dataclass
from typing import Iterable

from stanley._bits import MAX_VARIABLES, indices_of, mask_of, popcount
from stanley.exceptions import VariableIndexError

__all__ = ["SqfMonomial", "GenMonomial", "MonomialPrime", "check_variable"]


def check_variable(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise VariableIndexError(i, n)


def _check_mask(mask: int, n: int) -> None:
    if not 0 <= n <= MAX_VARIABLES:
        raise VariableIndexError(n, MAX_VARIABLES)
    if mask < 0 or mask >> n:
        offending = max(indices_of(mask)) if mask > 0 else mask
        raise VariableIndexError(offending, n)


@dataclass(frozen=True)
class SqfMonomial:
    """
    The squarefree monomial :math:`x_\\sigma` in a ring with :code:`n` variables.

    The support :math:`\\sigma` is stored as a bitmask, variable :code:`i` in bit
    :code:`i - 1`. The empty support is the monomial :code:`1`.
    """

    n: int
    mask: int

    def __post_init__(self):
        _check_mask(self.mask, self.n)

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "SqfMonomial":
        indices = list(indices)
        for i in indices:
            check_variable(i, n)
        return cls(n, mask_of(indices))

    @property
    def support_set(self) -> frozenset[int]:
        return frozenset(indices_of(self.mask))

    @property
    def indices(self) -> tuple[int, ...]:
        return indices_of(self.mask)

    @property
    def degree(self) -> int:
        return popcount(self.mask)

    def divides(self, other: "SqfMonomial") -> bool:
        return self.mask & ~other.mask == 0

    def __str__(self) -> str:
        if self.mask == 0:
            return "1"
        return "".join(f"x{i}" for i in self.indices)


@dataclass(frozen=True)
class GenMonomial:
    """A monomial with arbitrary nonnegative exponents, used as polarization input."""

    n: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != self.n:
            raise ValueError(
                f"Expected {self.n} exponents, got {len(self.exponents)}"
            )
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"Negative exponent in {self.exponents}")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: "GenMonomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def to_squarefree(self) -> SqfMonomial:
        if not self.is_squarefree:
            raise ValueError(f"{self} is not squarefree")
        return SqfMonomial.from_indices(
            self.n, [i + 1 for i, e in enumerate(self.exponents) if e]
        )

    def __str__(self) -> str:
        factors = [
            f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
            for i, e in enumerate(self.exponents)
            if e
        ]
        return "".join(factors) or "1"


@dataclass(frozen=True)
class MonomialPrime:
    """The prime ideal generated by the variables in :code:`mask`."""

    n: int
    mask: int

    def __post_init__(self):
        _check_mask(self.mask, self.n)

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "MonomialPrime":
        indices = list(indices)
        for i in indices:
            check_variable(i, n)
        return cls(n, mask_of(indices))

    @property
    def variable_set(self) -> frozenset[int]:
        return frozenset(indices_of(self.mask))
