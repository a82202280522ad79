__all__ = [
    "Clutter",
    "MinorKey",
    "Verdict",
    "ChordalityCertificate",
    "deletion",
    "contraction",
    "is_simplicial",
    "simplicial_vertices",
    "is_chordal",
    "d_complement",
    "edge_ideal",
    "clutter_of",
    "to_networkx",
    "graph_is_chordal",
    "perfect_elimination_order",
    "complement_graph",
]

from stanley.clutters._clutter import (
    Clutter,
    MinorKey,
    deletion,
    contraction,
    d_complement,
    edge_ideal,
    clutter_of,
)
from stanley.clutters._chordality import (
    Verdict,
    ChordalityCertificate,
    is_simplicial,
    simplicial_vertices,
    is_chordal,
)
from stanley.clutters._graphs import (
    to_networkx,
    graph_is_chordal,
    perfect_elimination_order,
    complement_graph,
)
