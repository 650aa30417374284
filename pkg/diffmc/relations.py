"""Relation graphs over the vertices of a graph and representative sets.

A relation graph joins u and v when the corresponding game (or type
comparison) started from the single-vertex tuples (u) and (v) is won by
Duplicator. Representatives are picked from a relation graph either as a
greedy maximal independent set or as one vertex per connected component.
"""

from __future__ import annotations

import functools
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from dataclasses import field
from typing import Callable
from typing import Optional
from typing import Union

import networkx as nx
from networkx.utils import UnionFind
from pydantic import Field
from strenum import StrEnum

from diffmc.config.constants import RepresentativeMode
from diffmc.difflocal import difflocal_winner
from diffmc.exceptions import InputError
from diffmc.exceptions import UncoloredGraphError
from diffmc.games.iso import atomic_type
from diffmc.games.solver import GameKind
from diffmc.games.solver import Winner
from diffmc.games.solver import l_of
from diffmc.games.solver import winner
from diffmc.graphs.graph import LabeledGraph
from diffmc.graphs.graph import VertexSet
from diffmc.logic.pinning import pin_tuple_labels
from diffmc.models import ColsRowsType
from diffmc.models import TableRenderable
from diffmc.utils.concurrency import parallel_map

logger = logging.getLogger(__name__)


class RelationKind(StrEnum):
    D_GAME = "d_game"
    """Duplicator wins the differential game."""

    SD_GAME = "sd_game"
    """Duplicator wins the semi-differential game."""

    EF_GAME = "ef_game"
    """Duplicator wins the Ehrenfeucht-Fraïssé game."""

    FO_TYPE = "fo_type"
    """Equal first-order types, by back-and-forth recursion."""

    DIFFLOCAL = "difflocal"
    """Same color and Duplicator wins the differential game decided inside
    the differential neighbourhood."""

    @classmethod
    def _missing_(cls, value: object) -> Optional[RelationKind]:
        """Case-insensitive lookup that also accepts the game names `d`, `sd`
        and `ef`."""
        if not isinstance(value, str):
            return None
        key = value.strip().lower().replace("-", "_")
        for kind in cls:
            if key in (kind.value, kind.value.replace("_game", "")):
                return kind
        return None

    @classmethod
    def parse(cls, value: str) -> RelationKind:
        try:
            return cls(value)
        except ValueError as e:
            valid = ", ".join(k.value for k in cls)
            raise InputError(
                f"Unknown relation kind {value!r}. Choose from: {valid}"
            ) from e


class RelationGraph(TableRenderable):
    """A symmetric, reflexive relation on 0..n-1.

    Only related pairs u < v are stored; every vertex is related to itself.
    """

    n: int
    kind: RelationKind
    rounds: int
    pairs: list[tuple[int, int]] = Field(default_factory=list)
    evaluations: int = Field(default=0, exclude=True)
    """Pairs decided while building the relation."""

    @functools.cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.pairs:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def related(self, u: int, v: int) -> bool:
        return u == v or v in self.adjacency[u]

    def neighbors(self, v: int) -> frozenset[int]:
        """Vertices related to `v`, other than `v` itself."""
        return self.adjacency[v]

    def to_networkx(self) -> nx.Graph:
        """The relation as a graph, without the reflexive loops."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.pairs)
        return g

    def __cols_rows__(self) -> ColsRowsType:
        cols = ["Vertex", "Related to"]
        rows = [
            [str(v), ", ".join(map(str, sorted(self.adjacency[v])))]
            for v in range(self.n)
        ]
        return cols, rows


class RelationSummary(TableRenderable):
    n: int
    kind: RelationKind
    rounds: int
    num_pairs: int
    num_components: int
    components: list[list[int]]
    independent_set: list[int]
    independent_set_size: int

    def __cols_rows__(self) -> ColsRowsType:
        cols = ["Kind", "Rounds", "Pairs", "Components", "Independent set"]
        rows = [
            [
                self.kind,
                str(self.rounds),
                str(self.num_pairs),
                " | ".join(" ".join(map(str, c)) for c in self.components),
                f"{' '.join(map(str, self.independent_set))} "
                f"({self.independent_set_size})",
            ]
        ]
        return cols, rows


@dataclass
class RepresentativeStats:
    """Counters filled in by `representatives`."""

    relation_builds: int = 0
    pair_evaluations: int = 0
    sizes: list[int] = field(default_factory=list)
    """|S| of every representative set computed, in call order."""

    def record(self, relation: RelationGraph, size: int) -> None:
        self.relation_builds += 1
        self.pair_evaluations += relation.evaluations
        self.sizes.append(size)


@functools.lru_cache(maxsize=1 << 16)
def hintikka_type(g: LabeledGraph, t: tuple[int, ...], q: int) -> tuple[object, ...]:
    """Canonical encoding of the rank-q first-order type of `t` in `g`.

    Rank 0 is the atomic type; rank q adds the set of rank q-1 types of
    every one-vertex extension of `t`. Encodings of tuples from different
    graphs are comparable.
    """
    base = atomic_type(g, t)
    if q == 0:
        return (base,)
    return (base, frozenset(hintikka_type(g, (*t, w), q - 1) for w in g.vertices))


def fo_type_equiv(
    g: LabeledGraph,
    a: Sequence[int],
    b: Sequence[int],
    q: int,
    *,
    h: Optional[LabeledGraph] = None,
) -> bool:
    """Whether (G, ā) and (H, b̄) satisfy the same formulas of quantifier
    rank q. H defaults to G.

    ā ≡_0 b̄ iff ā ↦ b̄ is a partial isomorphism, and ā ≡_q b̄ iff ā ≡_0 b̄,
    every extension āw has a partner b̄w' with āw ≡_{q-1} b̄w' and the
    other way round.

    Raises:
        InputError: The tuples differ in length or q is negative.
    """
    h = g if h is None else h
    if len(a) != len(b):
        raise InputError(f"Tuples differ in length: {len(a)} and {len(b)}")
    if q < 0:
        raise InputError(f"Quantifier rank must be nonnegative, got {q}")
    at, bt = g.check_vertices(a), h.check_vertices(b)
    return hintikka_type(g, at, q) == hintikka_type(h, bt, q)


_GAME_KINDS = {
    RelationKind.D_GAME: GameKind.D,
    RelationKind.SD_GAME: GameKind.SD,
    RelationKind.EF_GAME: GameKind.EF,
}


def _pair_test(
    g: LabeledGraph, kind: RelationKind, rounds: int
) -> Callable[[tuple[int, int]], bool]:
    if kind in _GAME_KINDS:
        game = _GAME_KINDS[kind]
        return lambda p: winner(game, g, (p[0],), (p[1],), rounds) == Winner.DUPLICATOR
    if kind == RelationKind.FO_TYPE:
        return lambda p: fo_type_equiv(g, (p[0],), (p[1],), rounds)
    if not g.is_colored:
        raise UncoloredGraphError("The difflocal relation needs a colored graph")
    colors = g.colors
    return lambda p: (
        colors[p[0]] == colors[p[1]]
        and difflocal_winner(g, p[0], p[1], rounds) == Winner.DUPLICATOR
    )


@functools.lru_cache(maxsize=4096)
def _related_pairs(
    g: LabeledGraph, kind: RelationKind, rounds: int, threads: int
) -> tuple[tuple[int, int], ...]:
    test = _pair_test(g, kind, rounds)
    candidates = [(u, v) for u in g.vertices for v in range(u + 1, g.n)]
    related = parallel_map(test, candidates, threads)
    return tuple(p for p, ok in zip(candidates, related) if ok)


def relation_graph(
    g: LabeledGraph, kind: Union[RelationKind, str], rounds: int, *, threads: int = 1
) -> RelationGraph:
    """Relation of the given kind at `rounds` rounds (quantifier rank for
    `fo_type`) between single vertices of `g`.

    Only pairs u < v are decided; reflexive pairs are related without
    playing.

    Raises:
        InputError: `rounds` is negative or `kind` is unknown.
        UncoloredGraphError: kind `difflocal` on an uncolored graph.
    """
    kind = RelationKind.parse(kind)
    if rounds < 0:
        raise InputError(f"Rounds must be nonnegative, got {rounds}")
    candidates = [(u, v) for u in g.vertices for v in range(u + 1, g.n)]
    pairs = _related_pairs(g, kind, rounds, threads)
    logger.debug(
        "Built %s relation at %d rounds: %d of %d pairs related",
        kind,
        rounds,
        len(pairs),
        len(candidates),
    )
    return RelationGraph(
        n=g.n, kind=kind, rounds=rounds, pairs=list(pairs), evaluations=len(candidates)
    )


def components(relation: RelationGraph) -> list[VertexSet]:
    """Connected components of the relation, each sorted, ordered by their
    smallest member."""
    uf = UnionFind(range(relation.n))
    for u, v in relation.pairs:
        uf.union(u, v)
    parts = [tuple(sorted(s)) for s in uf.to_sets()]
    return sorted(parts, key=lambda c: c[0])


def greedy_mis(relation: RelationGraph) -> VertexSet:
    """Scan vertices in ascending order, keeping each vertex unrelated to
    all kept ones."""
    chosen: list[int] = []
    for v in range(relation.n):
        if not any(relation.related(v, c) for c in chosen):
            chosen.append(v)
    return tuple(chosen)


def relation_summary(relation: RelationGraph) -> RelationSummary:
    comps = components(relation)
    mis = greedy_mis(relation)
    return RelationSummary(
        n=relation.n,
        kind=relation.kind,
        rounds=relation.rounds,
        num_pairs=len(relation.pairs),
        num_components=len(comps),
        components=[list(c) for c in comps],
        independent_set=list(mis),
        independent_set_size=len(mis),
    )


def representatives(
    g: LabeledGraph,
    vs: Sequence[int],
    p: int,
    *,
    mode: RepresentativeMode = RepresentativeMode.INDEPENDENT,
    kind: RelationKind = RelationKind.D_GAME,
    stats: Optional[RepresentativeStats] = None,
    threads: int = 1,
) -> VertexSet:
    """A vertex set S meeting every class of the rank-p type relation
    over the pinned tuple `vs`.

    G is labelled with the pinned tuple, the relation of `kind` at l(p)
    rounds is built on the labelled graph and S is its greedy maximal
    independent set (mode `independent`) or the smallest vertex of each
    of its components (mode `components`). The size of S is not bounded.

    Raises:
        VertexError: `vs` names a vertex outside the graph.
    """
    if p < 0:
        raise InputError(f"Rank must be nonnegative, got {p}")
    pinned = pin_tuple_labels(g, vs)
    relation = relation_graph(pinned, kind, l_of(p), threads=threads)
    if RepresentativeMode(mode) == RepresentativeMode.COMPONENTS:
        reps = tuple(c[0] for c in components(relation))
    else:
        reps = greedy_mis(relation)
    if stats is not None:
        stats.record(relation, len(reps))
    return reps
