"""
Reduced simplicial homology ranks from boundary-matrix ranks.

Ranks over :math:`\\mathbb{Q}` use fraction-free (Bareiss) elimination on
integer matrices; ranks over :math:`\\mathbb{F}_p` reduce modulo the prime.
Both are exact.
"""

from dataclasses import dataclass
from typing import Optional

from stanley._bits import bit, indices_of, popcount, submasks
from stanley.config import CoefficientField, Limits
from stanley.depth._complex import SimplicialComplex

__all__ = [
    "matrix_rank",
    "boundary_matrix",
    "reduced_homology_ranks",
    "HomologyProfile",
]

Matrix = list[list[int]]


def _rank_rational(matrix: Matrix) -> int:
    rows = [row[:] for row in matrix if any(row)]
    if not rows:
        return 0
    n_cols = len(rows[0])
    rank = 0
    previous_pivot = 1
    for col in range(n_cols):
        pivot_row = next(
            (r for r in range(rank, len(rows)) if rows[r][col] != 0), None
        )
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            factor = rows[r][col]
            rows[r] = [
                (pivot * rows[r][c] - factor * rows[rank][c]) // previous_pivot
                for c in range(n_cols)
            ]
        previous_pivot = pivot
        rank += 1
        if rank == len(rows):
            break
    return rank


def _rank_modular(matrix: Matrix, prime: int) -> int:
    rows = [[x % prime for x in row] for row in matrix]
    rows = [row for row in rows if any(row)]
    if not rows:
        return 0
    n_cols = len(rows[0])
    rank = 0
    for col in range(n_cols):
        pivot_row = next(
            (r for r in range(rank, len(rows)) if rows[r][col] != 0), None
        )
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inverse = pow(rows[rank][col], prime - 2, prime)
        rows[rank] = [x * inverse % prime for x in rows[rank]]
        for r in range(rank + 1, len(rows)):
            factor = rows[r][col]
            if factor:
                rows[r] = [
                    (x - factor * y) % prime for x, y in zip(rows[r], rows[rank])
                ]
        rank += 1
        if rank == len(rows):
            break
    return rank


def matrix_rank(
    matrix: Matrix, field: CoefficientField = "Q", prime: int = 32003
) -> int:
    """
    Exact rank of an integer matrix over :math:`\\mathbb{Q}` or
    :math:`\\mathbb{F}_p`.

    Over :math:`\\mathbb{Q}` the Bareiss update keeps every entry an integer:
    each division by the previous pivot is exact.
    """
    if field == "Q":
        return _rank_rational(matrix)
    return _rank_modular(matrix, prime)


def boundary_matrix(lower: list[int], upper: list[int]) -> Matrix:
    """
    The boundary map from faces of size :code:`k + 1` (:code:`upper`) to faces of
    size :code:`k` (:code:`lower`), one row per lower face. The sign of dropping
    the :code:`j`-th vertex (0-based, increasing order) is :math:`(-1)^j`.
    """
    position = {face: r for r, face in enumerate(lower)}
    matrix = [[0] * len(upper) for _ in lower]
    for c, face in enumerate(upper):
        for j, vertex in enumerate(indices_of(face)):
            matrix[position[face & ~bit(vertex)]][c] = -1 if j % 2 else 1
    return matrix


def reduced_homology_ranks(
    complex_: SimplicialComplex,
    sigma: Optional[int] = None,
    field: CoefficientField = "Q",
    prime: int = 32003,
) -> tuple[int, ...]:
    """
    Ranks of reduced homology of the subcomplex induced on :code:`sigma`.

    Entry :code:`k + 1` of the result is :math:`\\dim \\tilde H_k`, starting at
    :math:`k = -1`; the irrelevant complex :math:`\\{\\emptyset\\}` has rank 1 in
    dimension :math:`-1`.
    """
    by_size = complex_.faces_by_size(sigma)
    top = max(by_size, default=0)
    # boundary_ranks[s] is the rank of the map from faces of size s to size s-1
    boundary_ranks = [0] * (top + 2)
    for size in range(1, top + 1):
        upper = by_size.get(size, [])
        lower = by_size.get(size - 1, [])
        if upper and lower:
            boundary_ranks[size] = matrix_rank(
                boundary_matrix(lower, upper), field, prime
            )
    ranks = []
    for size in range(0, top + 1):
        chains = len(by_size.get(size, []))
        ranks.append(chains - boundary_ranks[size] - boundary_ranks[size + 1])
    return tuple(ranks)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology ranks of every induced subcomplex on the vertex set."""

    coefficients: CoefficientField
    ranks: dict[int, tuple[int, ...]]

    @classmethod
    def of(
        cls, complex_: SimplicialComplex, limits: Optional[Limits] = None
    ) -> "HomologyProfile":
        limits = limits or Limits.default()
        limits.require("hochster_max_m", popcount(complex_.vertices))
        ranks = {
            sigma: reduced_homology_ranks(
                complex_, sigma, limits.field, limits.prime
            )
            for sigma in submasks(complex_.vertices)
        }
        return cls(limits.field, ranks)

    def nonzero(self) -> list[tuple[int, int, int]]:
        """Triples :code:`(sigma, k, rank)` with :math:`\\tilde H_k \\neq 0`."""
        return [
            (sigma, k - 1, rank)
            for sigma, ranks in sorted(self.ranks.items())
            for k, rank in enumerate(ranks)
            if rank
        ]
