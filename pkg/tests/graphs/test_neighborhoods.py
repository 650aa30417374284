from __future__ import annotations

import math

import pytest

from diffmc.exceptions import InputError
from diffmc.exceptions import UncoloredGraphError
from diffmc.exceptions import UndefinedPairError
from diffmc.exceptions import VertexError
from diffmc.graphs.generators import all_graphs_up_to
from diffmc.graphs.generators import edgeless
from diffmc.graphs.generators import half_graph
from diffmc.graphs.generators import path
from diffmc.graphs.graph import LabeledGraph
from diffmc.graphs.neighborhoods import differential_neighborhood
from diffmc.graphs.neighborhoods import distance
from diffmc.graphs.neighborhoods import sym_diff_neighborhood


def uniform(g: LabeledGraph) -> LabeledGraph:
    return g.with_colors({v: 0 for v in g.vertices})


@pytest.mark.parametrize(
    "g, u, v, expect",
    [
        pytest.param(path(4), 0, 3, (1, 2), id="P4 ends"),
        pytest.param(path(3), 0, 1, (0, 1, 2), id="P3 adjacent pair"),
        pytest.param(path(3), 1, 1, (), id="same vertex"),
        pytest.param(edgeless(3), 0, 2, (), id="edgeless"),
    ],
)
def test_sym_diff_neighborhood(
    g: LabeledGraph, u: int, v: int, expect: tuple[int, ...]
) -> None:
    assert sym_diff_neighborhood(g, u, v) == expect
    assert sym_diff_neighborhood(g, v, u) == expect


def test_sym_diff_neighborhood_all_small_graphs() -> None:
    for g in all_graphs_up_to(4):
        for u in g.vertices:
            assert sym_diff_neighborhood(g, u, u) == ()
            for v in g.vertices:
                assert sym_diff_neighborhood(g, u, v) == sym_diff_neighborhood(
                    g, v, u
                )


def test_sym_diff_neighborhood_bad_vertex() -> None:
    with pytest.raises(VertexError):
        sym_diff_neighborhood(path(3), 0, 3)


def test_dn_radius_one_is_sym_diff() -> None:
    g = uniform(half_graph(3))
    for u in g.vertices:
        for v in g.vertices:
            if u != v:
                assert differential_neighborhood(g, u, v, 1) == sym_diff_neighborhood(
                    g, u, v
                )


def test_dn_p4_closed() -> None:
    g = uniform(path(4))
    assert differential_neighborhood(g, 0, 3, 1) == (1, 2)
    assert differential_neighborhood(g, 0, 3, 2, closed=True) == (0, 1, 2, 3)


def test_dn_only_grows_through_same_colored_pairs() -> None:
    # D(0, 3) = {1, 2}, but 1 and 2 have different colors
    g = path(4).with_colors({0: 0, 1: 0, 2: 1, 3: 0})
    assert differential_neighborhood(g, 0, 3, 2) == (1, 2)
    assert differential_neighborhood(g, 0, 3, 5, closed=True) == (0, 1, 2, 3)


def test_dn_monotone_in_radius() -> None:
    for g in all_graphs_up_to(4):
        g = uniform(g)
        for u in g.vertices:
            for v in range(u + 1, g.n):
                previous: set[int] = set()
                for r in range(1, g.n + 2):
                    dn = set(differential_neighborhood(g, u, v, r))
                    assert previous <= dn
                    previous = dn


def test_dn_different_colors() -> None:
    g = path(3).with_colors({0: 0, 1: 1, 2: 0})
    with pytest.raises(UndefinedPairError):
        differential_neighborhood(g, 0, 1, 1)


def test_dn_uncolored() -> None:
    with pytest.raises(UncoloredGraphError):
        differential_neighborhood(path(3), 0, 2, 1)


def test_dn_radius_zero() -> None:
    with pytest.raises(InputError):
        differential_neighborhood(uniform(path(3)), 0, 2, 0)


@pytest.mark.parametrize(
    "g, u, v, expect",
    [
        pytest.param(path(5), 0, 4, 4, id="path ends"),
        pytest.param(path(5), 2, 2, 0, id="same vertex"),
        pytest.param(edgeless(2), 0, 1, math.inf, id="disconnected"),
    ],
)
def test_distance(g: LabeledGraph, u: int, v: int, expect: float) -> None:
    assert distance(g, u, v) == expect
