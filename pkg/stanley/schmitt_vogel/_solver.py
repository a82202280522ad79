"""
The Schmitt-Vogel number over witnesses whose levels partition :math:`G(I)`.

This class is finite, so the search is exact within it; the value found is an
upper bound for the number over arbitrary witnesses.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from stanley._bits import is_subset, popcount, sort_key
from stanley.config import Limits
from stanley.exceptions import ZeroIdealError
from stanley.ideals import SqfIdeal
from stanley.schmitt_vogel._witness import SvWitness, check_sv_witness

__all__ = ["SvResult", "sv_number"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SvResult:
    """:code:`value` is exact over witnesses that partition the generators."""

    value: int
    witness: SvWitness


def _canonical_generators(ideal: SqfIdeal) -> list[int]:
    """Generators by degree, largest first, then lexicographically."""
    return sorted(ideal.masks, key=lambda g: (-popcount(g), sort_key(g)))


class _LevelSearch:
    """
    Fill levels after the first one. Every level after the first may be taken
    to be a maximal set of remaining generators that are pairwise compatible
    over the generators already placed: moving a compatible generator forward
    only enlarges the pool of divisors later levels can use.
    """

    def __init__(self, generators: list[int]):
        self.generators = generators
        self.everything = (1 << len(generators)) - 1
        self.dead: set[tuple[int, int]] = set()
        self.nodes = 0

    def _compatible(self, placed: list[int], u: int, u2: int) -> bool:
        union = u | u2
        return any(is_subset(w, union) for w in placed)

    def _levels(self, placed_set: int) -> list[list[int]]:
        placed = [g for k, g in enumerate(self.generators) if placed_set >> k & 1]
        remaining = [
            k for k in range(len(self.generators)) if not placed_set >> k & 1
        ]
        graph = nx.Graph()
        graph.add_nodes_from(remaining)
        for pos, a in enumerate(remaining):
            for b in remaining[pos + 1 :]:
                if self._compatible(placed, self.generators[a], self.generators[b]):
                    graph.add_edge(a, b)
        cliques = [sorted(c) for c in nx.find_cliques(graph)]
        cliques.sort(key=lambda c: (-len(c), c))
        return cliques

    def fill(self, placed_set: int, levels_left: int, levels: list[list[int]]) -> bool:
        if placed_set == self.everything:
            return True
        if levels_left == 0 or (placed_set, levels_left) in self.dead:
            return False
        self.nodes += 1
        for clique in self._levels(placed_set):
            levels.append(clique)
            grown = placed_set
            for k in clique:
                grown |= 1 << k
            if self.fill(grown, levels_left - 1, levels):
                return True
            levels.pop()
        self.dead.add((placed_set, levels_left))
        return False


def sv_number(ideal: SqfIdeal, *, limits: Optional[Limits] = None) -> SvResult:
    """
    The least number of levels over witnesses partitioning :math:`G(I)`, with a
    witness attaining it.

    Levels are searched by iterative deepening; the first level is tried with
    each generator in canonical order.

    Raises:
        ZeroIdealError: :code:`ideal` is zero.
        CapExceededError: more generators than :code:`limits.sv_max_generators`.
    """
    if ideal.is_zero:
        raise ZeroIdealError("sv_number")
    limits = limits or Limits.default()
    limits.require("sv_max_generators", len(ideal))

    generators = _canonical_generators(ideal)
    search = _LevelSearch(generators)
    for r in range(1, len(generators) + 1):
        for first in range(len(generators)):
            levels: list[list[int]] = [[first]]
            if search.fill(1 << first, r - 1, levels):
                witness = SvWitness.from_masks(
                    ideal.n, ([generators[k] for k in level] for level in levels)
                )
                assert check_sv_witness(ideal, witness), witness
                logger.debug(
                    "sv of %s is %d after %d nodes", ideal, r, search.nodes
                )
                return SvResult(r, witness)
        logger.debug("sv of %s exceeds %d", ideal, r)
    # one generator per level always works
    raise AssertionError(f"no witness with {len(generators)} levels for {ideal}")
