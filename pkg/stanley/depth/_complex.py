from dataclasses import dataclass
from typing import Iterator, Optional

from stanley._bits import full_mask, is_subset, popcount, submasks
from stanley.exceptions import UnitIdealError
from stanley.ideals import SqfIdeal

__all__ = ["SimplicialComplex", "stanley_reisner"]


@dataclass(frozen=True)
class SimplicialComplex:
    """
    The Stanley-Reisner complex of a proper squarefree ideal, kept implicitly:
    :math:`\\sigma` is a face iff no minimal nonface (generator) lies inside it.
    """

    n: int
    nonfaces: frozenset[int]
    vertices: int

    def is_face(self, sigma: int) -> bool:
        return is_subset(sigma, self.vertices) and not any(
            is_subset(g, sigma) for g in self.nonfaces
        )

    def faces(self, within: Optional[int] = None) -> Iterator[int]:
        """Faces contained in :code:`within` (default: all vertices)."""
        ground = self.vertices if within is None else within & self.vertices
        for sigma in submasks(ground):
            if self.is_face(sigma):
                yield sigma

    def faces_by_size(self, within: Optional[int] = None) -> dict[int, list[int]]:
        grouped: dict[int, list[int]] = {}
        for sigma in self.faces(within):
            grouped.setdefault(popcount(sigma), []).append(sigma)
        for faces in grouped.values():
            faces.sort()
        return grouped


def stanley_reisner(ideal: SqfIdeal, active: Optional[int] = None) -> SimplicialComplex:
    """
    The complex whose faces are the :math:`\\sigma` with :math:`x_\\sigma \\notin I`,
    on the active variables (default: all of them).

    Raises:
        UnitIdealError: the unit ideal has no Stanley-Reisner complex.
    """
    if ideal.is_unit:
        raise UnitIdealError("stanley_reisner")
    vertices = full_mask(ideal.n) if active is None else active
    return SimplicialComplex(ideal.n, ideal.masks, vertices)
