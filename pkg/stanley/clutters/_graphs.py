from itertools import combinations
from typing import Optional

import networkx as nx

from stanley._bits import indices_of, popcount
from stanley.clutters._clutter import Clutter, d_complement
from stanley.exceptions import NotAGraphError

__all__ = [
    "to_networkx",
    "graph_is_chordal",
    "perfect_elimination_order",
    "complement_graph",
]


def _require_graph(graph: Clutter) -> None:
    for edge in graph.edges:
        if popcount(edge) != 2:
            raise NotAGraphError(list(indices_of(edge)))


def to_networkx(graph: Clutter) -> nx.Graph:
    _require_graph(graph)
    result = nx.Graph()
    result.add_nodes_from(graph.vertices)
    result.add_edges_from(indices_of(edge) for edge in graph.edges)
    return result


def graph_is_chordal(graph: Clutter) -> bool:
    """
    Chordality of a graph (a 2-uniform clutter) in the classical sense.

    Raises:
        NotAGraphError: some edge does not have exactly two vertices.
    """
    return nx.is_chordal(to_networkx(graph))


def perfect_elimination_order(graph: Clutter) -> Optional[list[int]]:
    """
    A perfect elimination ordering, found by repeatedly removing a vertex whose
    neighborhood is complete, or None when the graph is not chordal.
    """
    remaining = to_networkx(graph)
    order: list[int] = []
    while remaining.number_of_nodes():
        vertex = next(
            (
                v
                for v in sorted(remaining.nodes)
                if all(
                    remaining.has_edge(a, b)
                    for a, b in combinations(remaining.neighbors(v), 2)
                )
            ),
            None,
        )
        if vertex is None:
            return None
        order.append(vertex)
        remaining.remove_node(vertex)
    return order


def complement_graph(graph: Clutter) -> Clutter:
    """2-subsets of the active vertices that are not edges."""
    _require_graph(graph)
    return d_complement(graph, 2)
