from dataclasses import dataclass
from typing import Iterable, Optional

from stanley._bits import (
    bit,
    full_mask,
    indices_of,
    is_subset,
    masks_of_size,
    minimal_masks,
    popcount,
    sort_key,
)
from stanley.exceptions import EmptyEdgeError, InactiveVertexError
from stanley.ideals import SqfIdeal, SqfMonomial

__all__ = [
    "Clutter",
    "MinorKey",
    "deletion",
    "contraction",
    "d_complement",
    "edge_ideal",
    "clutter_of",
]


@dataclass(frozen=True)
class Clutter:
    """
    A clutter on the vertex set :code:`{1..n_vertices}`.

    Edges and the set of active vertices are bitmasks. Minor operations remove
    vertices from :code:`active` and never renumber the remaining ones.
    """

    n_vertices: int
    edges: frozenset[int]
    active: int

    def __post_init__(self):
        if not is_subset(self.active, full_mask(self.n_vertices)):
            raise ValueError(
                f"Active vertices {indices_of(self.active)} exceed {self.n_vertices}"
            )
        for edge in self.edges:
            if not is_subset(edge, self.active):
                raise ValueError(
                    f"Edge {indices_of(edge)} leaves the active vertices "
                    f"{indices_of(self.active)}"
                )
        if minimal_masks(self.edges) != self.edges:
            raise ValueError("No edge of a clutter may contain another")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Iterable[int]],
        active: Optional[Iterable[int]] = None,
    ) -> "Clutter":
        edge_masks = frozenset(SqfMonomial.from_indices(n, e).mask for e in edges)
        active_mask = (
            full_mask(n)
            if active is None
            else SqfMonomial.from_indices(n, active).mask
        )
        return cls(n, edge_masks, active_mask)

    @property
    def vertices(self) -> tuple[int, ...]:
        return indices_of(self.active)

    def edge_lists(self) -> list[list[int]]:
        return [list(indices_of(e)) for e in sorted(self.edges, key=sort_key)]

    @property
    def has_empty_edge(self) -> bool:
        return 0 in self.edges

    @property
    def min_edge_cardinality(self) -> Optional[int]:
        """Smallest edge size, or None for a clutter without edges."""
        return min((popcount(e) for e in self.edges), default=None)

    def edges_through(self, v: int) -> list[int]:
        var = bit(v)
        return [e for e in self.edges if e & var]

    def restrict_to_uniform(self, d: int) -> "Clutter":
        return Clutter(
            self.n_vertices,
            frozenset(e for e in self.edges if popcount(e) == d),
            self.active,
        )

    def __str__(self) -> str:
        edges = ", ".join(
            "{" + ",".join(map(str, e)) + "}" for e in self.edge_lists()
        )
        return f"Clutter(n={self.n_vertices}, edges=[{edges}])"


@dataclass(frozen=True)
class MinorKey:
    """
    Canonical name of a minor: the vertices deleted and the vertices contracted.

    Deletion and contraction of distinct vertices commute, so the order of the
    operations does not matter.
    """

    deleted: int = 0
    contracted: int = 0

    def __post_init__(self):
        if self.deleted & self.contracted:
            raise ValueError(
                f"Vertices {indices_of(self.deleted & self.contracted)} are both "
                "deleted and contracted"
            )

    def delete(self, v: int) -> "MinorKey":
        return MinorKey(self.deleted | bit(v), self.contracted)

    def contract(self, v: int) -> "MinorKey":
        return MinorKey(self.deleted, self.contracted | bit(v))

    def apply(self, clutter: Clutter) -> Clutter:
        removed = self.deleted | self.contracted
        if not is_subset(removed, clutter.active):
            raise InactiveVertexError(indices_of(removed & ~clutter.active)[0])
        kept = ~self.contracted
        residues = (e & kept for e in clutter.edges if not e & self.deleted)
        return Clutter(
            clutter.n_vertices, minimal_masks(residues), clutter.active & ~removed
        )

    def as_dict(self) -> dict[str, list[int]]:
        return {
            "deleted": list(indices_of(self.deleted)),
            "contracted": list(indices_of(self.contracted)),
        }


def _require_active(clutter: Clutter, v: int) -> None:
    if not 1 <= v <= clutter.n_vertices or not clutter.active & bit(v):
        raise InactiveVertexError(v)


def deletion(clutter: Clutter, v: int) -> Clutter:
    """The clutter :math:`C \\setminus v`: edges avoiding :code:`v`."""
    _require_active(clutter, v)
    var = bit(v)
    return Clutter(
        clutter.n_vertices,
        frozenset(e for e in clutter.edges if not e & var),
        clutter.active & ~var,
    )


def contraction(clutter: Clutter, v: int) -> Clutter:
    """
    The clutter :math:`C / v`: minimal elements of :math:`e \\setminus v`.

    Contracting a singleton edge :code:`{v}` yields the degenerate clutter whose
    only edge is empty.
    """
    _require_active(clutter, v)
    var = bit(v)
    return Clutter(
        clutter.n_vertices,
        minimal_masks(e & ~var for e in clutter.edges),
        clutter.active & ~var,
    )


def d_complement(clutter: Clutter, d: int) -> Clutter:
    """All :code:`d`-subsets of the active vertices that are not edges."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    edges = frozenset(
        e for e in masks_of_size(clutter.active, d) if e not in clutter.edges
    )
    return Clutter(clutter.n_vertices, edges, clutter.active)


def edge_ideal(clutter: Clutter) -> SqfIdeal:
    if clutter.has_empty_edge:
        raise EmptyEdgeError()
    return SqfIdeal(clutter.n_vertices, clutter.edges)


def clutter_of(ideal: SqfIdeal) -> Clutter:
    """The clutter whose edges are the supports of the minimal generators."""
    return Clutter(ideal.n, ideal.masks, full_mask(ideal.n))
