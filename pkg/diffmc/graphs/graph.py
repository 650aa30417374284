"""Immutable labelled and colored simple graphs.

Vertices are the dense integers ``0..n-1``. Adjacency is stored as one
integer bitmask per vertex, so neighbourhood algebra (symmetric
differences, unions, membership) is plain integer arithmetic.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from collections.abc import Iterator
from collections.abc import Mapping
from functools import cached_property
from typing import TYPE_CHECKING
from typing import Optional

from diffmc.exceptions import GraphFormatError
from diffmc.exceptions import VertexError

if TYPE_CHECKING:
    import networkx as nx

logger = logging.getLogger(__name__)

VertexSet = tuple[int, ...]
"""Vertex identifiers, sorted ascending without duplicates."""

COLOR_LABEL_PREFIX = "color:"
"""Colors are mirrored as labels `color:<k>` so atomic types see them."""


def color_label(color: int) -> str:
    return f"{COLOR_LABEL_PREFIX}{color}"


def mask_to_vertices(mask: int) -> VertexSet:
    """Expand a vertex bitmask into a sorted vertex set."""
    out: list[int] = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def vertices_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class LabeledGraph:
    """A finite simple graph with per-vertex labels and optional colors.

    Instances are immutable and hashable. Two graphs are equal when they
    have the same vertex count, edges, stored labels and colors.
    """

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Optional[Mapping[int, Iterable[str]]] = None,
        colors: Optional[Mapping[int, int]] = None,
    ) -> None:
        if n < 0:
            raise GraphFormatError(f"Vertex count must be nonnegative, got {n}")
        self._n = n
        adj = [0] * n
        for u, v in edges:
            self._check(u)
            self._check(v)
            if u == v:
                raise GraphFormatError(f"Self-loop on vertex {u} is not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._adj: tuple[int, ...] = tuple(adj)

        lbls: list[frozenset[str]] = [frozenset()] * n
        for v, names in (labels or {}).items():
            self._check(v)
            lbls[v] = frozenset(names)
        self._labels: tuple[frozenset[str], ...] = tuple(lbls)

        cols: list[Optional[int]] = [None] * n
        for v, c in (colors or {}).items():
            self._check(v)
            if c < 0:
                raise GraphFormatError(f"Color of vertex {v} must be nonnegative")
            cols[v] = c
        self._colors: tuple[Optional[int], ...] = tuple(cols)

    @classmethod
    def _from_parts(
        cls,
        adj: tuple[int, ...],
        labels: tuple[frozenset[str], ...],
        colors: tuple[Optional[int], ...],
    ) -> LabeledGraph:
        """Build a graph from already validated internals."""
        g = cls.__new__(cls)
        g._n = len(adj)
        g._adj = adj
        g._labels = labels
        g._colors = colors
        return g

    def _check(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise VertexError(f"Vertex {v} is not in 0..{self._n - 1}")

    def check_vertex(self, v: int) -> int:
        """Return `v` if it is a vertex of the graph, else raise VertexError."""
        self._check(v)
        return v

    def check_vertices(self, vertices: Iterable[int]) -> tuple[int, ...]:
        return tuple(self.check_vertex(v) for v in vertices)

    @property
    def n(self) -> int:
        return self._n

    @property
    def vertices(self) -> range:
        return range(self._n)

    def __len__(self) -> int:
        return self._n

    def neighbor_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> VertexSet:
        self._check(v)
        return mask_to_vertices(self._adj[v])

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self._adj[v]).count("1")

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as pairs (u, v) with u < v, in lexicographic order."""
        for u in range(self._n):
            for v in mask_to_vertices(self._adj[u] >> (u + 1)):
                yield (u, u + 1 + v)

    @property
    def num_edges(self) -> int:
        return sum(bin(m).count("1") for m in self._adj) // 2

    def stored_labels(self, v: int) -> frozenset[str]:
        """Labels given to `v` explicitly, without color labels."""
        return self._labels[v]

    def labels_of(self, v: int) -> frozenset[str]:
        """Labels of `v` as seen by formulas and games.

        Includes the `color:<k>` label when `v` is colored.
        """
        c = self._colors[v]
        if c is None:
            return self._labels[v]
        return self._labels[v] | {color_label(c)}

    def has_label(self, v: int, label: str) -> bool:
        return label in self.labels_of(v)

    @cached_property
    def atomic_labels(self) -> tuple[frozenset[str], ...]:
        """`labels_of` for every vertex, computed once."""
        return tuple(self.labels_of(v) for v in self.vertices)

    def label_alphabet(self) -> frozenset[str]:
        """Every label carried by some vertex, color labels included."""
        alphabet: set[str] = set()
        for lbls in self.atomic_labels:
            alphabet |= lbls
        return frozenset(alphabet)

    def color(self, v: int) -> Optional[int]:
        return self._colors[v]

    @property
    def colors(self) -> tuple[Optional[int], ...]:
        return self._colors

    @property
    def is_colored(self) -> bool:
        """Every vertex carries a color."""
        return all(c is not None for c in self._colors)

    def with_colors(self, colors: Optional[Mapping[int, int]]) -> LabeledGraph:
        """Copy of the graph with the given colors (None removes all colors)."""
        cols: list[Optional[int]] = [None] * self._n
        for v, c in (colors or {}).items():
            self._check(v)
            if c < 0:
                raise GraphFormatError(f"Color of vertex {v} must be nonnegative")
            cols[v] = c
        return LabeledGraph._from_parts(self._adj, self._labels, tuple(cols))

    def with_labels(self, extra: Mapping[int, Iterable[str]]) -> LabeledGraph:
        """Copy of the graph with `extra` labels added to the stored ones."""
        lbls = list(self._labels)
        for v, names in extra.items():
            self._check(v)
            lbls[v] = lbls[v] | frozenset(names)
        return LabeledGraph._from_parts(self._adj, tuple(lbls), self._colors)

    def without_labels(self) -> LabeledGraph:
        """Copy of the graph with no labels and no colors."""
        return LabeledGraph._from_parts(
            self._adj, (frozenset(),) * self._n, (None,) * self._n
        )

    def complement(self) -> LabeledGraph:
        """Edge complement; labels and colors are kept."""
        full = (1 << self._n) - 1
        adj = tuple(full & ~m & ~(1 << v) for v, m in enumerate(self._adj))
        return LabeledGraph._from_parts(adj, self._labels, self._colors)

    def to_networkx(self) -> nx.Graph:
        """Convert to a networkx graph. Labels and colors become node attributes."""
        import networkx as nx

        g = nx.Graph()
        for v in self.vertices:
            g.add_node(v, labels=sorted(self._labels[v]), color=self._colors[v])
        g.add_edges_from(self.edges())
        return g

    @cached_property
    def nx_graph(self) -> nx.Graph:
        """Cached networkx view, used for traversals."""
        return self.to_networkx()

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> LabeledGraph:
        """Build a graph from a networkx graph.

        Nodes are relabelled to 0..n-1 in sorted order when they are not
        already those integers. `labels` and `color` node attributes are kept.
        """
        try:
            nodes = sorted(g.nodes)
        except TypeError:
            nodes = list(g.nodes)
        index = {node: i for i, node in enumerate(nodes)}
        labels: dict[int, list[str]] = {}
        colors: dict[int, int] = {}
        for node, data in g.nodes(data=True):
            if data.get("labels"):
                labels[index[node]] = list(data["labels"])
            if data.get("color") is not None:
                colors[index[node]] = int(data["color"])
        edges = [(index[u], index[v]) for u, v in g.edges if u != v]
        return cls(len(nodes), edges, labels, colors)

    def _key(
        self,
    ) -> tuple[tuple[int, ...], tuple[frozenset[str], ...], tuple[Optional[int], ...]]:
        return (self._adj, self._labels, self._colors)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return (
            f"LabeledGraph(n={self._n}, edges={list(self.edges())}, "
            f"colored={self.is_colored})"
        )


def induced_subgraph(
    g: LabeledGraph, vertices: Iterable[int]
) -> tuple[LabeledGraph, dict[int, int]]:
    """The subgraph G[S] and the map from old to new vertex ids.

    New ids follow the ascending order of S. Labels and colors are kept.
    """
    s = sorted(set(g.check_vertices(vertices)))
    mapping = {old: new for new, old in enumerate(s)}
    adj: list[int] = []
    for old in s:
        m = 0
        for w in mask_to_vertices(g.neighbor_mask(old) & vertices_to_mask(s)):
            m |= 1 << mapping[w]
        adj.append(m)
    sub = LabeledGraph._from_parts(  # pyright: ignore[reportPrivateUsage]
        tuple(adj),
        tuple(g.stored_labels(v) for v in s),
        tuple(g.color(v) for v in s),
    )
    return sub, mapping
