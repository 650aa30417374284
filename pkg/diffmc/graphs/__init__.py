from __future__ import annotations

from diffmc.graphs.graph import LabeledGraph
from diffmc.graphs.graph import VertexSet
from diffmc.graphs.graph import induced_subgraph

__all__ = ["LabeledGraph", "VertexSet", "induced_subgraph"]
