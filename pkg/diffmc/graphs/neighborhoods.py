"""Neighbourhood algebra: symmetric differences, differential
neighbourhoods and distances."""

from __future__ import annotations

import logging
import math
from typing import Union

from diffmc.exceptions import InputError
from diffmc.exceptions import UncoloredGraphError
from diffmc.exceptions import UndefinedPairError
from diffmc.graphs.graph import LabeledGraph
from diffmc.graphs.graph import VertexSet
from diffmc.graphs.graph import mask_to_vertices

logger = logging.getLogger(__name__)


def sym_diff_mask(g: LabeledGraph, u: int, v: int) -> int:
    """Bitmask of N(u) Δ N(v)."""
    return g.neighbor_mask(u) ^ g.neighbor_mask(v)


def sym_diff_neighborhood(g: LabeledGraph, u: int, v: int) -> VertexSet:
    """D(u, v): vertices adjacent to exactly one of u and v.

    u and v themselves belong to the result when they are adjacent.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    return mask_to_vertices(sym_diff_mask(g, u, v))


def differential_neighborhood_mask(
    g: LabeledGraph, u: int, v: int, r: int, *, closed: bool = False
) -> int:
    """Bitmask version of `differential_neighborhood`."""
    g.check_vertex(u)
    g.check_vertex(v)
    if r < 1:
        raise InputError(f"Radius must be at least 1, got {r}")
    if not g.is_colored:
        raise UncoloredGraphError(
            "Differential neighbourhoods need a color on every vertex"
        )
    colors = g.colors
    if colors[u] != colors[v]:
        raise UndefinedPairError(
            f"Vertices {u} and {v} have different colors ({colors[u]} and {colors[v]})"
        )

    current = sym_diff_mask(g, u, v)
    for _ in range(r - 1):
        members = mask_to_vertices(current)
        grown = current
        for i, a in enumerate(members):
            for b in members[i + 1 :]:
                if colors[a] == colors[b]:
                    grown |= sym_diff_mask(g, a, b)
        if grown == current:
            break  # fixpoint
        current = grown
    if closed:
        current |= (1 << u) | (1 << v)
    return current


def differential_neighborhood(
    g: LabeledGraph, u: int, v: int, r: int, *, closed: bool = False
) -> VertexSet:
    """DN_r(u, v) on a colored graph.

    DN_1 is D(u, v). Each further round adds D(a, b) for every pair of
    distinct same-colored vertices a, b already in the set. With `closed`
    the result also contains u and v (the set written DN_r[u, v]).
    """
    return mask_to_vertices(differential_neighborhood_mask(g, u, v, r, closed=closed))


def distance(g: LabeledGraph, u: int, v: int) -> Union[int, float]:
    """Length of a shortest u-v path, `math.inf` when there is none."""
    import networkx as nx

    g.check_vertex(u)
    g.check_vertex(v)
    try:
        return nx.shortest_path_length(g.nx_graph, u, v)
    except nx.NetworkXNoPath:
        return math.inf
