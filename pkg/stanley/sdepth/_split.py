from dataclasses import dataclass
from typing import Optional

from stanley._bits import bit, full_mask
from stanley.ideals import (
    SqfIdeal,
    check_variable,
    colon_by_variable,
    eliminate_variable,
)
from stanley.sdepth._partition import IntervalPartition
from stanley.sdepth._poset import CharPoset, PosetKind, build_poset, char_poset

__all__ = ["Split", "split_quotient", "split_ideal", "combine_split"]


@dataclass(frozen=True)
class Split:
    """
    The two summands of a splitting at :math:`x_i` as posets on the active
    variables other than :math:`i`: :code:`without` for :math:`I' = I \\cap S'`
    and :code:`with_` for :math:`(I : x_i)`, whose elements come back shifted
    by :math:`i`. Either ground set may be empty.
    """

    i: int
    whole: CharPoset
    without: CharPoset
    with_: CharPoset


def _split(
    ideal: SqfIdeal, i: int, kind: PosetKind, active: Optional[int]
) -> Split:
    check_variable(i, ideal.n)
    active = full_mask(ideal.n) if active is None else active
    if not active & bit(i):
        raise ValueError(f"Variable {i} is not active")
    whole = char_poset(ideal, kind, active)
    rest = active & ~bit(i)
    without = build_poset(eliminate_variable(ideal, i), kind, rest)
    with_ = build_poset(colon_by_variable(ideal, i), kind, rest)
    return Split(i, whole, without, with_)


def split_quotient(
    ideal: SqfIdeal, i: int, active: Optional[int] = None
) -> Split:
    """:math:`S/I = S'/I'S' \\oplus x_i S/(I : x_i)` on characteristic posets."""
    return _split(ideal, i, PosetKind.QUOTIENT, active)


def split_ideal(ideal: SqfIdeal, i: int, active: Optional[int] = None) -> Split:
    """:math:`I = I'S' \\oplus x_i (I : x_i)` on characteristic posets."""
    return _split(ideal, i, PosetKind.IDEAL, active)


def combine_split(
    split: Split, without: IntervalPartition, with_: IntervalPartition
) -> IntervalPartition:
    """
    Glue partitions of the two summands into one of the whole poset; intervals
    of the second summand gain :math:`i` at both ends, so its dimensions grow
    by one.

    Raises:
        ValueError: a part does not partition its summand.
    """
    for name, part, poset in (
        ("first", without, split.without),
        ("second", with_, split.with_),
    ):
        defect = part.first_defect(poset)
        if defect is not None:
            raise ValueError(f"The {name} summand is not partitioned: {defect}")
    var = bit(split.i)
    shifted = [(s | var, t | var) for s, t in with_.intervals]
    return IntervalPartition.of(list(without.intervals) + shifted)
