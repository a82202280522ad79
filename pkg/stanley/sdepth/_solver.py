"""
Exact Stanley depth by exact cover of the characteristic poset.

A partition whose intervals all have :math:`|\\tau| \\geq k` exists iff one
exists whose intervals are either singletons :math:`[\\sigma, \\sigma]` with
:math:`|\\sigma| > k` or have :math:`|\\tau| = k` exactly: an interval with a
larger top splits as :math:`[\\sigma, \\tau \\setminus j] \\sqcup
[\\sigma \\cup j, \\tau]` and both halves stay inside the poset. So deciding
level :code:`k` is an exact cover of the elements of size at most :code:`k` by
intervals with top of size :code:`k`.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from stanley._bits import masks_of_size, popcount, submasks
from stanley.config import Limits
from stanley.ideals import SqfIdeal
from stanley.sdepth._partition import Interval, IntervalPartition, interval_members
from stanley.sdepth._poset import CharPoset, PosetKind, active_mask, char_poset

__all__ = ["SdepthResult", "decide_sdepth", "sdepth", "sdepth_of_poset"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SdepthResult:
    """
    The Stanley depth :code:`value` with a decomposition attaining it; the
    decision procedure refuted level :code:`value + 1` on the same poset.
    """

    value: int
    certificate: IntervalPartition
    kind: PosetKind
    active: int


def _level_intervals(poset: CharPoset, k: int) -> list[Interval]:
    if poset.kind is PosetKind.QUOTIENT:
        tops = [t for t in poset.ground if popcount(t) == k]
        return [(s, t) for t in tops for s in submasks(t)]
    return [
        (s, t)
        for t in masks_of_size(poset.active, k)
        for s in submasks(t)
        if s in poset
    ]


class _ExactCover:
    """
    Backtracking exact cover over bitsets: always branch on the uncovered item
    with the fewest usable rows, and remember covered states known to fail.
    """

    def __init__(self, n_items: int, rows: list[int]):
        self.rows = rows
        self.full = (1 << n_items) - 1
        self.by_item: list[list[int]] = [[] for _ in range(n_items)]
        for r, row in enumerate(rows):
            for item in range(n_items):
                if row >> item & 1:
                    self.by_item[item].append(r)
        self.dead: set[int] = set()
        self.nodes = 0

    def solve(self) -> Optional[list[int]]:
        chosen: list[int] = []
        return chosen if self._search(0, chosen) else None

    def _search(self, covered: int, chosen: list[int]) -> bool:
        if covered == self.full:
            return True
        if covered in self.dead:
            return False
        self.nodes += 1

        best: Optional[list[int]] = None
        for item, candidates in enumerate(self.by_item):
            if covered >> item & 1:
                continue
            usable = [r for r in candidates if not self.rows[r] & covered]
            if best is None or len(usable) < len(best):
                best = usable
                if not best:
                    break
        for r in best or []:
            chosen.append(r)
            if self._search(covered | self.rows[r], chosen):
                return True
            chosen.pop()
        self.dead.add(covered)
        return False


def decide_sdepth(poset: CharPoset, k: int) -> Optional[IntervalPartition]:
    """
    An interval partition of :code:`poset` with every :math:`|\\tau| \\geq k`, or
    None when there is none. The search is complete.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    low = [s for s in poset.ground if popcount(s) <= k]
    singletons = [(s, s) for s in poset.ground if popcount(s) > k]
    index = {s: pos for pos, s in enumerate(low)}

    intervals = _level_intervals(poset, k)
    rows = []
    for sigma, tau in intervals:
        row = 0
        for rho in interval_members(sigma, tau):
            row |= 1 << index[rho]
        rows.append(row)

    solver = _ExactCover(len(low), rows)
    chosen = solver.solve()
    logger.debug(
        "k=%d on %d elements, %d intervals: %s after %d nodes",
        k,
        len(low),
        len(rows),
        "sat" if chosen is not None else "unsat",
        solver.nodes,
    )
    if chosen is None:
        return None
    return IntervalPartition.of([intervals[r] for r in chosen] + singletons)


def _upper_bound(poset: CharPoset) -> int:
    if poset.kind is PosetKind.QUOTIENT:
        return max((popcount(s) for s in poset.ground), default=0)
    return poset.m


def sdepth_of_poset(
    poset: CharPoset, *, limits: Optional[Limits] = None
) -> SdepthResult:
    """
    Descend from one above the largest possible top; the first satisfiable
    level is the Stanley depth and the level above it was refuted.

    Raises:
        ValueError: the poset is empty.
        CapExceededError: more active variables than :code:`limits.sdepth_max_n`.
    """
    limits = limits or Limits.default()
    limits.require("sdepth_max_n", poset.m)
    if not poset.ground:
        raise ValueError("The Stanley depth of an empty poset is undefined")
    for k in range(_upper_bound(poset) + 1, -1, -1):
        partition = decide_sdepth(poset, k)
        if partition is not None:
            return SdepthResult(k, partition, poset.kind, poset.active)
    # level 0 always admits the singleton partition
    raise AssertionError("no partition at level 0")


def sdepth(
    ideal: SqfIdeal,
    kind: "PosetKind | str",
    m: Optional[int] = None,
    *,
    active: Optional[int] = None,
    limits: Optional[Limits] = None,
) -> SdepthResult:
    """
    Stanley depth of :code:`ideal` or :math:`S/I`, with a certificate.

    Args:
        ideal: a proper squarefree ideal, nonzero when :code:`kind="ideal"`.
        kind: :code:`"ideal"` or :code:`"quotient"`.
        m: number of active variables; variables beyond the generator supports
            are free. Defaults to the ambient :code:`n`.
        active: an explicit active variable set, overriding :code:`m`.
        limits: desk-scale caps.
    """
    if active is None:
        active = active_mask(ideal, m)
    poset = char_poset(ideal, kind, active)
    result = sdepth_of_poset(poset, limits=limits)
    logger.debug("sdepth of %s (%s) = %d", ideal, poset.kind.value, result.value)
    return result
