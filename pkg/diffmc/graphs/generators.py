"""Graph families used as test instances."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator
from collections.abc import Sequence
from typing import Optional
from typing import Union

import networkx as nx
from strenum import StrEnum

from diffmc.exceptions import GeneratorError
from diffmc.graphs.graph import LabeledGraph

logger = logging.getLogger(__name__)


class GraphFamily(StrEnum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    EDGELESS = "edgeless"
    HALF_GRAPH = "half_graph"
    LADDER = "ladder"
    COMPLEMENT_OF = "complement_of"
    ERDOS_RENYI = "erdos_renyi"
    ALL_GRAPHS_UP_TO = "all_graphs_up_to"


def _need(n: int, minimum: int, family: str) -> None:
    if n < minimum:
        raise GeneratorError(f"{family} needs n >= {minimum}, got {n}")


def path(n: int) -> LabeledGraph:
    _need(n, 0, GraphFamily.PATH)
    return LabeledGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> LabeledGraph:
    _need(n, 3, GraphFamily.CYCLE)
    return LabeledGraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> LabeledGraph:
    _need(n, 0, GraphFamily.COMPLETE)
    return LabeledGraph(n, itertools.combinations(range(n), 2))


def edgeless(n: int) -> LabeledGraph:
    _need(n, 0, GraphFamily.EDGELESS)
    return LabeledGraph(n)


def half_graph(n: int) -> LabeledGraph:
    """Half-graph on 2n vertices v_1..v_2n (vertex id i-1 for v_i).

    v_i and v_j are adjacent when i is odd, j is even and i < j.
    Ids 0, 2, 4, ... form one side and 1, 3, 5, ... the other.
    """
    _need(n, 1, GraphFamily.HALF_GRAPH)
    edges = [
        (i - 1, j - 1)
        for i in range(1, 2 * n + 1, 2)
        for j in range(2, 2 * n + 1, 2)
        if i < j
    ]
    return LabeledGraph(2 * n, edges)


def half_graph_sides(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two sides of `half_graph(n)`: odd-indexed and even-indexed v_i."""
    return tuple(range(0, 2 * n, 2)), tuple(range(1, 2 * n, 2))


def ladder(n: int) -> LabeledGraph:
    """Ladder with n rungs (2n vertices)."""
    _need(n, 1, GraphFamily.LADDER)
    return LabeledGraph.from_networkx(nx.ladder_graph(n))


def complement_of(g: LabeledGraph) -> LabeledGraph:
    return g.complement()


def erdos_renyi(n: int, p: float = 0.5, seed: Optional[int] = None) -> LabeledGraph:
    """G(n, p) random graph, reproducible for a fixed seed."""
    _need(n, 0, GraphFamily.ERDOS_RENYI)
    if not 0.0 <= p <= 1.0:
        raise GeneratorError(f"Edge probability must be in [0, 1], got {p}")
    return LabeledGraph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def all_graphs(n: int) -> Iterator[LabeledGraph]:
    """Every simple graph on exactly n vertices, one per adjacency matrix.

    Edge sets are enumerated as bitmasks over the pairs (i, j), i < j, in
    lexicographic order.
    """
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield LabeledGraph(n, [p for bit, p in enumerate(pairs) if mask >> bit & 1])


def all_graphs_up_to(n: int) -> Iterator[LabeledGraph]:
    """Every simple graph on 1..n vertices.

    The empty graph is left out: first-order semantics is over nonempty
    domains.
    """
    _need(n, 1, GraphFamily.ALL_GRAPHS_UP_TO)
    for size in range(1, n + 1):
        yield from all_graphs(size)


def _int_params(
    family: str, params: Sequence[Union[int, str]], count: int
) -> list[int]:
    if len(params) != count:
        raise GeneratorError(
            f"{family} takes {count} integer parameter(s), got {len(params)}"
        )
    try:
        return [int(p) for p in params]
    except ValueError as e:
        raise GeneratorError(f"Invalid parameters for {family}: {params}") from e


def stream(
    kind: str,
    *params: Union[int, str],
    seed: Optional[int] = None,
    edge_probability: float = 0.5,
) -> Iterator[LabeledGraph]:
    """Generate the graphs of a family.

    Every family yields exactly one graph except `all_graphs_up_to`.
    `complement_of` takes another family and its parameters, e.g.
    `stream("complement_of", "path", 3)`.
    """
    try:
        family = GraphFamily(kind)
    except ValueError as e:
        valid = ", ".join(f.value for f in GraphFamily)
        raise GeneratorError(f"Unknown graph family {kind!r}. Choose from: {valid}") from e

    logger.debug("Generating %s%s", family, params)
    if family == GraphFamily.COMPLEMENT_OF:
        if not params:
            raise GeneratorError("complement_of needs a family to complement")
        inner, *rest = params
        for g in stream(
            str(inner), *rest, seed=seed, edge_probability=edge_probability
        ):
            yield complement_of(g)
        return
    if family == GraphFamily.ALL_GRAPHS_UP_TO:
        (n,) = _int_params(family, params, 1)
        yield from all_graphs_up_to(n)
        return
    (n,) = _int_params(family, params, 1)
    if family == GraphFamily.ERDOS_RENYI:
        yield erdos_renyi(n, edge_probability, seed)
        return
    builders = {
        GraphFamily.PATH: path,
        GraphFamily.CYCLE: cycle,
        GraphFamily.COMPLETE: complete,
        GraphFamily.EDGELESS: edgeless,
        GraphFamily.HALF_GRAPH: half_graph,
        GraphFamily.LADDER: ladder,
    }
    yield builders[family](n)


def generate(
    kind: str,
    *params: Union[int, str],
    seed: Optional[int] = None,
    edge_probability: float = 0.5,
) -> LabeledGraph:
    """Generate a single graph of a family."""
    graphs = list(
        itertools.islice(
            stream(kind, *params, seed=seed, edge_probability=edge_probability), 2
        )
    )
    if len(graphs) != 1:
        raise GeneratorError(
            f"{kind} does not describe a single graph; use stream() instead"
        )
    return graphs[0]
