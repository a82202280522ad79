from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from stanley._bits import popcount, sort_key
from stanley.exceptions import AmbientMismatchError, InvalidWitnessError
from stanley.ideals import GenMonomial, SqfIdeal, SqfMonomial

__all__ = ["SvWitness", "SvCheck", "check_sv_witness", "pair_product"]


def _level_key(u: SqfMonomial) -> tuple[int, tuple[int, ...]]:
    return (-popcount(u.mask), sort_key(u.mask))


@dataclass(frozen=True)
class SvWitness:
    """
    Levels :math:`P_1, \\dots, P_r` of monomials of :math:`I`, in order.

    Levels are sets; the zero ideal is witnessed by no levels at all.
    """

    n: int
    levels: tuple[frozenset[SqfMonomial], ...]

    @classmethod
    def from_supports(
        cls, n: int, levels: Iterable[Iterable[Iterable[int]]]
    ) -> "SvWitness":
        return cls(
            n,
            tuple(
                frozenset(SqfMonomial.from_indices(n, s) for s in level)
                for level in levels
            ),
        )

    @classmethod
    def from_masks(cls, n: int, levels: Iterable[Iterable[int]]) -> "SvWitness":
        return cls(
            n,
            tuple(frozenset(SqfMonomial(n, m) for m in level) for level in levels),
        )

    @property
    def r(self) -> int:
        return len(self.levels)

    def sorted_levels(self) -> list[list[SqfMonomial]]:
        return [sorted(level, key=_level_key) for level in self.levels]

    def mask_levels(self) -> list[list[int]]:
        return [[u.mask for u in level] for level in self.sorted_levels()]

    def as_index_lists(self) -> list[list[list[int]]]:
        return [[list(u.indices) for u in level] for level in self.sorted_levels()]

    def __str__(self) -> str:
        return " | ".join(
            "{" + ", ".join(str(u) for u in level) + "}"
            for level in self.sorted_levels()
        )


@dataclass(frozen=True)
class SvCheck:
    """
    Outcome of :func:`check_sv_witness`. On failure :code:`condition` names the
    first violated condition: :code:`"first_level"` (:math:`|P_1| \\neq 1`),
    :code:`"pair"` (no earlier divisor of :math:`u u''`, see :code:`level` and
    :code:`pair`) or :code:`"generation"` (see :code:`missing`).
    """

    ok: bool
    condition: Optional[str] = None
    level: Optional[int] = None
    pair: Optional[tuple[SqfMonomial, SqfMonomial]] = None
    missing: tuple[SqfMonomial, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "valid"
        if self.condition == "pair" and self.pair is not None:
            u, u2 = self.pair
            return (
                f"level {self.level}: nothing in an earlier level divides "
                f"{pair_product(u, u2)}"
            )
        if self.condition == "generation":
            missing = ", ".join(str(g) for g in self.missing)
            return f"generators not covered: {missing}"
        return "the first level is not a single monomial"


def pair_product(u: SqfMonomial, v: SqfMonomial) -> GenMonomial:
    """:math:`u v` as an exponent vector; exponents are at most 2."""
    return GenMonomial(
        u.n,
        tuple((u.mask >> j & 1) + (v.mask >> j & 1) for j in range(u.n)),
    )


def _as_general(u: SqfMonomial) -> GenMonomial:
    return GenMonomial(u.n, tuple(u.mask >> j & 1 for j in range(u.n)))


def check_sv_witness(ideal: SqfIdeal, witness: SvWitness) -> SvCheck:
    """
    Check the three witness conditions for :code:`ideal`.

    Raises:
        AmbientMismatchError: the witness lives in another ring.
        InvalidWitnessError: some monomial of the witness is not in :code:`ideal`.
    """
    if witness.n != ideal.n:
        raise AmbientMismatchError(ideal.n, witness.n)
    for number, level in enumerate(witness.levels, start=1):
        for u in level:
            if not ideal.contains(u):
                raise InvalidWitnessError(f"{u} in level {number} is not in {ideal}")

    if ideal.is_zero:
        # nothing lies in the zero ideal, so the witness has no monomials
        return SvCheck(ok=True)
    if not witness.levels or len(witness.levels[0]) != 1:
        return SvCheck(ok=False, condition="first_level", level=1)

    earlier: list[GenMonomial] = [_as_general(u) for u in witness.levels[0]]
    levels = witness.sorted_levels()
    for number, level in enumerate(levels[1:], start=2):
        for u, u2 in combinations(level, 2):
            product = pair_product(u, u2)
            if not any(w.divides(product) for w in earlier):
                return SvCheck(
                    ok=False, condition="pair", level=number, pair=(u, u2)
                )
        earlier.extend(_as_general(u) for u in level)

    covered = {u.mask for level in witness.levels for u in level}
    missing = tuple(g for g in ideal.sorted_generators() if g.mask not in covered)
    if missing:
        return SvCheck(ok=False, condition="generation", missing=missing)
    return SvCheck(ok=True)
