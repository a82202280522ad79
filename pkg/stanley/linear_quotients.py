"""
Linear quotients: checking an order, searching for one, and the constructive
order on the edge ideal of the d-complement of a chordal clutter.

With linear quotients in hand, the projective dimension of :math:`S/I` is one
more than the largest number of variables generating a successive colon, and
the depth follows from the Auslander-Buchsbaum formula.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from stanley._bits import bit, minimal_masks, popcount, sort_key
from stanley.clutters import (
    Clutter,
    contraction,
    d_complement,
    deletion,
    edge_ideal,
    is_chordal,
    simplicial_vertices,
)
from stanley.config import Limits
from stanley.exceptions import (
    EdgeCardinalityError,
    InvalidOrderError,
    NotChordalError,
    ZeroIdealError,
)
from stanley.ideals import SqfIdeal, SqfMonomial

__all__ = [
    "LqOrder",
    "LqCheck",
    "colon_prev",
    "check_lq_order",
    "find_lq_order",
    "chordal_lq_order",
    "pd_from_lq",
    "depth_from_lq",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LqOrder:
    """
    An order :math:`u_1 \\succ \\dots \\succ u_t` on :math:`G(I)` with linear
    quotients; :code:`colon_counts[k]` is the number of variables generating the
    colon at position :code:`k + 2`.
    """

    order: tuple[SqfMonomial, ...]
    colon_counts: tuple[int, ...]

    @property
    def masks(self) -> list[int]:
        return [u.mask for u in self.order]


@dataclass(frozen=True)
class LqCheck:
    """
    Result of :func:`check_lq_order`: either a valid :class:`LqOrder`, or the
    first 1-based position whose colon is not generated by variables.
    """

    lq: Optional[LqOrder] = None
    failed_at: Optional[int] = None
    colon: Optional[SqfIdeal] = None

    def __bool__(self) -> bool:
        return self.lq is not None


def _colon_masks(prefix: Sequence[int], u: int) -> frozenset[int]:
    return minimal_masks(v & ~u for v in prefix)


def _is_linear(masks: frozenset[int]) -> bool:
    return all(popcount(m) == 1 for m in masks)


def colon_prev(order: Sequence[SqfMonomial], i: int) -> SqfIdeal:
    """
    The colon :math:`(u_1, \\dots, u_{i-1}) : u_i` for a 1-based position
    :code:`2 <= i <= t`.
    """
    if not 2 <= i <= len(order):
        raise IndexError(f"Position {i} is outside 2..{len(order)}")
    masks = [u.mask for u in order]
    return SqfIdeal(order[0].n, _colon_masks(masks[: i - 1], masks[i - 1]))


def check_lq_order(ideal: SqfIdeal, order: Sequence[SqfMonomial]) -> LqCheck:
    """
    Check whether :code:`ideal` has linear quotients with respect to :code:`order`.

    Raises:
        InvalidOrderError: :code:`order` is not a permutation of :math:`G(I)`.
    """
    masks = [u.mask for u in order]
    if len(set(masks)) != len(masks) or set(masks) != set(ideal.masks):
        raise InvalidOrderError(
            f"The order is not a permutation of the minimal generators of {ideal}"
        )
    counts = []
    for pos in range(1, len(masks)):
        colon = _colon_masks(masks[:pos], masks[pos])
        if not _is_linear(colon):
            return LqCheck(failed_at=pos + 1, colon=SqfIdeal(ideal.n, colon))
        counts.append(len(colon))
    return LqCheck(lq=LqOrder(tuple(order), tuple(counts)))


def find_lq_order(ideal: SqfIdeal) -> Optional[LqOrder]:
    """
    Search for an order with linear quotients, or return None if there is none.

    Whether a generator may follow a prefix depends only on the set of generators
    already placed, so dead sets are remembered across branches.
    """
    if ideal.is_zero:
        raise ZeroIdealError("find_lq_order")
    generators = ideal.sorted_masks()
    t = len(generators)
    dead: set[int] = set()

    def extend(placed: int, prefix: list[int]) -> Optional[list[int]]:
        if len(prefix) == t:
            return prefix
        if placed in dead:
            return None
        for k, u in enumerate(generators):
            if placed >> k & 1:
                continue
            if prefix and not _is_linear(_colon_masks(prefix, u)):
                continue
            found = extend(placed | 1 << k, prefix + [u])
            if found is not None:
                return found
        dead.add(placed)
        return None

    found = extend(0, [])
    logger.debug("order search on %s: %d dead prefixes", ideal, len(dead))
    if found is None:
        return None
    check = check_lq_order(ideal, [SqfMonomial(ideal.n, u) for u in found])
    return check.lq


def _chordal_order(clutter: Clutter, d: int) -> list[int]:
    generators = d_complement(clutter, d).edges
    if not generators:
        return []
    if d == 1 or len(clutter.vertices) == 1:
        return sorted(generators, key=sort_key)
    v = simplicial_vertices(clutter)[0]
    with_v = [u | bit(v) for u in _chordal_order(contraction(clutter, v), d - 1)]
    without_v = _chordal_order(deletion(clutter, v), d)
    return with_v + without_v


def chordal_lq_order(
    clutter: Clutter, d: int, *, limits: Optional[Limits] = None
) -> LqOrder:
    """
    The linear-quotient order on :math:`G(I(c_d(C)))` built recursively at the
    lowest simplicial vertex :math:`v`: first the generators divisible by
    :math:`x_v`, ordered through the :math:`(d-1)`-complement of :math:`C/v`,
    then the others, ordered through the :math:`d`-complement of
    :math:`C \\setminus v`.

    Raises:
        NotChordalError: :code:`clutter` is not chordal.
        EdgeCardinalityError: some edge has fewer than :code:`d` vertices.
        ZeroIdealError: the d-complement has no edges.
    """
    certificate = is_chordal(clutter, limits=limits)
    if not certificate:
        raise NotChordalError(certificate.witness)
    minimum = clutter.min_edge_cardinality
    if minimum is not None and minimum < d:
        raise EdgeCardinalityError(minimum, d)
    ideal = edge_ideal(d_complement(clutter, d))
    if ideal.is_zero:
        raise ZeroIdealError("chordal_lq_order")

    order = [SqfMonomial(ideal.n, u) for u in _chordal_order(clutter, d)]
    check = check_lq_order(ideal, order)
    if check.lq is None:
        raise InvalidOrderError(
            f"The constructed order on {ideal} fails at position {check.failed_at}"
        )
    return check.lq


def pd_from_lq(lq: LqOrder) -> int:
    """:math:`\\mathrm{pd}(S/I) = \\max n_i + 1`; a principal ideal gives 1."""
    return max(lq.colon_counts, default=0) + 1


def depth_from_lq(lq: LqOrder, active_variable_count: int) -> int:
    return active_variable_count - pd_from_lq(lq)
