import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Optional

from stanley._bits import bit, indices_of, is_subset
from stanley.clutters._clutter import Clutter, MinorKey
from stanley.config import Limits
from stanley.exceptions import InactiveVertexError

__all__ = [
    "Verdict",
    "ChordalityCertificate",
    "is_simplicial",
    "simplicial_vertices",
    "is_chordal",
]

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    CHORDAL = "chordal"
    NOT_CHORDAL = "not_chordal"


@dataclass(frozen=True)
class ChordalityCertificate:
    """
    Outcome of :func:`is_chordal`.

    For a chordal clutter, :code:`simplicial` maps the key of every distinct
    minor met during the traversal to one of its simplicial vertices, or to
    :code:`None` when the minor is degenerate (empty edge, no edge, or no vertex).
    For a non-chordal clutter, :code:`witness` names a minor without a
    simplicial vertex.
    """

    verdict: Verdict
    witness: Optional[MinorKey] = None
    simplicial: dict[MinorKey, Optional[int]] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.verdict is Verdict.CHORDAL

    def recheck(self, clutter: Clutter) -> bool:
        """Replay the certificate against :code:`clutter` with :func:`is_simplicial`."""
        if self.verdict is Verdict.NOT_CHORDAL:
            if self.witness is None:
                return False
            minor = self.witness.apply(clutter)
            return not _is_degenerate(minor) and not simplicial_vertices(minor)
        for key, vertex in self.simplicial.items():
            minor = key.apply(clutter)
            if vertex is None:
                if not _is_degenerate(minor):
                    return False
            elif not is_simplicial(minor, vertex):
                return False
        return True


def is_simplicial(clutter: Clutter, v: int) -> bool:
    """
    Whether every two distinct edges through :code:`v` have a third edge inside
    their union minus :code:`v`.
    """
    if not 1 <= v <= clutter.n_vertices or not clutter.active & bit(v):
        raise InactiveVertexError(v)
    var = bit(v)
    through = clutter.edges_through(v)
    for e1, e2 in combinations(through, 2):
        room = (e1 | e2) & ~var
        if not any(is_subset(e3, room) for e3 in clutter.edges):
            return False
    return True


def simplicial_vertices(clutter: Clutter) -> list[int]:
    return [v for v in clutter.vertices if is_simplicial(clutter, v)]


def _is_degenerate(clutter: Clutter) -> bool:
    return clutter.has_empty_edge or not clutter.edges or not clutter.active


def is_chordal(
    clutter: Clutter, *, limits: Optional[Limits] = None
) -> ChordalityCertificate:
    """
    Decide whether every minor of :code:`clutter` has a simplicial vertex.

    Minors are reached by deleting or contracting one active vertex at a time and
    are memoized by content, so each distinct minor is examined once. Degenerate
    minors pass vacuously.

    Raises:
        CapExceededError: more active vertices than :code:`limits.chordality_max_n`.
    """
    limits = limits or Limits.default()
    limits.require("chordality_max_n", len(clutter.vertices))

    seen: set[tuple[int, frozenset[int]]] = set()
    simplicial: dict[MinorKey, Optional[int]] = {}
    queue = deque([MinorKey()])
    while queue:
        key = queue.popleft()
        minor = key.apply(clutter)
        content = (minor.active, minor.edges)
        if content in seen:
            continue
        seen.add(content)

        if _is_degenerate(minor):
            # minors of a degenerate minor stay degenerate
            simplicial[key] = None
            continue
        vertex = next(
            (v for v in minor.vertices if is_simplicial(minor, v)), None
        )
        if vertex is None:
            logger.debug("minor %s of %s has no simplicial vertex", key, clutter)
            return ChordalityCertificate(Verdict.NOT_CHORDAL, witness=key)
        simplicial[key] = vertex

        for v in indices_of(minor.active):
            queue.append(key.delete(v))
            queue.append(key.contract(v))

    logger.debug("%s is chordal; %d distinct minors", clutter, len(simplicial))
    return ChordalityCertificate(Verdict.CHORDAL, simplicial=simplicial)
