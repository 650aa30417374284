from __future__ import annotations

import pytest
from inline_snapshot import snapshot

from diffmc.exceptions import GraphFormatError
from diffmc.exceptions import VertexError
from diffmc.graphs.generators import path
from diffmc.graphs.graph import LabeledGraph
from diffmc.graphs.graph import color_label
from diffmc.graphs.graph import induced_subgraph
from diffmc.graphs.graph import mask_to_vertices
from diffmc.graphs.graph import vertices_to_mask


def test_adjacency_is_symmetric() -> None:
    g = LabeledGraph(4, [(0, 1), (2, 1)])
    assert g.adjacent(0, 1) and g.adjacent(1, 0)
    assert g.adjacent(1, 2) and g.adjacent(2, 1)
    assert not g.adjacent(0, 2)
    assert list(g.edges()) == [(0, 1), (1, 2)]
    assert g.num_edges == 2
    assert g.neighbors(1) == (0, 2)
    assert g.degree(3) == 0


def test_duplicate_edges_are_merged() -> None:
    g = LabeledGraph(2, [(0, 1), (1, 0), (0, 1)])
    assert list(g.edges()) == [(0, 1)]


def test_self_loop_rejected() -> None:
    with pytest.raises(GraphFormatError, match="Self-loop"):
        LabeledGraph(2, [(1, 1)])


@pytest.mark.parametrize(
    "edges",
    [
        pytest.param([(0, 3)], id="edge past n"),
        pytest.param([(-1, 0)], id="negative vertex"),
    ],
)
def test_out_of_range_vertex(edges: list[tuple[int, int]]) -> None:
    with pytest.raises(VertexError):
        LabeledGraph(3, edges)


def test_negative_vertex_count() -> None:
    with pytest.raises(GraphFormatError):
        LabeledGraph(-1)


def test_colors_show_up_as_labels() -> None:
    g = LabeledGraph(2, [(0, 1)], labels={0: ["red"]}, colors={0: 1, 1: 0})
    assert g.is_colored
    assert g.stored_labels(0) == frozenset({"red"})
    assert g.labels_of(0) == frozenset({"red", color_label(1)})
    assert g.labels_of(1) == frozenset({"color:0"})
    assert g.label_alphabet() == frozenset({"red", "color:0", "color:1"})


def test_partial_coloring_is_not_colored() -> None:
    g = LabeledGraph(3, colors={0: 0, 1: 0})
    assert not g.is_colored
    assert g.color(2) is None


def test_with_colors_keeps_structure() -> None:
    g = path(3).with_labels({1: ["mid"]})
    colored = g.with_colors({0: 0, 1: 0, 2: 1})
    assert list(colored.edges()) == list(g.edges())
    assert colored.stored_labels(1) == frozenset({"mid"})
    assert colored.colors == (0, 0, 1)
    assert colored.with_colors(None).colors == (None, None, None)
    # labels are added, never replaced
    assert g.with_labels({1: ["x"]}).stored_labels(1) == frozenset({"mid", "x"})


def test_complement() -> None:
    g = path(3).complement()
    assert list(g.edges()) == [(0, 2)]
    assert g.complement() == path(3)


def test_equality_and_hash() -> None:
    assert path(3) == LabeledGraph(3, [(1, 2), (0, 1)])
    assert hash(path(3)) == hash(LabeledGraph(3, [(1, 2), (0, 1)]))
    assert path(3) != path(3).with_labels({0: ["a"]})
    assert path(3) != path(3).with_colors({0: 0, 1: 0, 2: 0})


def test_repr() -> None:
    assert repr(path(3)) == snapshot(
        "LabeledGraph(n=3, edges=[(0, 1), (1, 2)], colored=False)"
    )


def test_masks() -> None:
    assert mask_to_vertices(0b10110) == (1, 2, 4)
    assert mask_to_vertices(0) == ()
    assert vertices_to_mask([4, 1, 2]) == 0b10110


def test_networkx_roundtrip_keeps_labels_and_colors() -> None:
    g = LabeledGraph(3, [(0, 2)], labels={1: ["a", "b"]}, colors={0: 0, 1: 1, 2: 0})
    assert LabeledGraph.from_networkx(g.to_networkx()) == g


def test_from_networkx_relabels_nodes() -> None:
    import networkx as nx

    nxg = nx.Graph()
    nxg.add_edges_from([("b", "c"), ("a", "b")])
    g = LabeledGraph.from_networkx(nxg)
    assert g.n == 3
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_induced_subgraph_p4() -> None:
    # P4 on vertices 0-1-2-3: {0, 2} induces two isolated vertices
    sub, mapping = induced_subgraph(path(4), [2, 0])
    assert sub.n == 2
    assert list(sub.edges()) == []
    assert mapping == {0: 0, 2: 1}


def test_induced_subgraph_everything() -> None:
    g = path(4).with_labels({3: ["end"]}).with_colors({0: 0, 1: 1, 2: 0, 3: 1})
    sub, mapping = induced_subgraph(g, g.vertices)
    assert sub == g
    assert mapping == {v: v for v in g.vertices}


def test_induced_subgraph_preserves_labels_and_colors() -> None:
    g = LabeledGraph(
        4,
        [(0, 1), (1, 3), (2, 3)],
        labels={3: ["t"]},
        colors={0: 0, 1: 1, 2: 0, 3: 2},
    )
    sub, mapping = induced_subgraph(g, [1, 3])
    assert list(sub.edges()) == [(0, 1)]
    for old, new in mapping.items():
        assert sub.stored_labels(new) == g.stored_labels(old)
        assert sub.color(new) == g.color(old)


def test_induced_subgraph_empty() -> None:
    sub, mapping = induced_subgraph(path(3), [])
    assert sub.n == 0
    assert mapping == {}


def test_induced_subgraph_outside_vertex() -> None:
    with pytest.raises(VertexError):
        induced_subgraph(path(3), [0, 5])
