from __future__ import annotations

import itertools
from pathlib import Path

import pytest
from inline_snapshot import snapshot

from diffmc.difflocal import Coloring
from diffmc.difflocal import ColoringPreset
from diffmc.difflocal import DifflocalMode
from diffmc.difflocal import apply_coloring
from diffmc.difflocal import atomic_type_coloring
from diffmc.difflocal import default_radius
from diffmc.difflocal import difflocal_winner
from diffmc.difflocal import dn_census
from diffmc.difflocal import load_coloring
from diffmc.difflocal import parse_coloring
from diffmc.difflocal import preset_coloring
from diffmc.difflocal import refine_coloring
from diffmc.difflocal import uniform_coloring
from diffmc.exceptions import ColoringError
from diffmc.exceptions import UncoloredGraphError
from diffmc.exceptions import UndefinedPairError
from diffmc.games.solver import d_winner
from diffmc.graphs.generators import all_graphs_up_to
from diffmc.graphs.generators import edgeless
from diffmc.graphs.generators import path
from diffmc.graphs.graph import LabeledGraph
from diffmc.graphs.io import graph_to_json
from diffmc.graphs.io import parse_graph


def uniform(g: LabeledGraph) -> LabeledGraph:
    return apply_coloring(g, uniform_coloring(g))


def test_uniform_coloring() -> None:
    g = uniform(path(4))
    assert g.colors == (0, 0, 0, 0)
    assert uniform_coloring(path(4)).m == 1


def test_atomic_type_coloring() -> None:
    g = path(4).with_labels({1: ["red"], 3: ["red"]})
    coloring = atomic_type_coloring(g)
    assert coloring.colors == {0: 0, 1: 1, 2: 0, 3: 1}
    assert preset_coloring(g, ColoringPreset.ATOMIC_TYPE) == coloring
    assert preset_coloring(g, ColoringPreset.UNIFORM) == uniform_coloring(g)


def test_refine_coloring() -> None:
    refined = refine_coloring(uniform_coloring(path(4)), {0: "a", 1: "b", 2: "a", 3: "b"})
    assert refined.colors == {0: 0, 1: 1, 2: 0, 3: 1}


def test_coloring_survives_graph_json() -> None:
    g = apply_coloring(path(3), parse_coloring('{"colors": {"0": 0, "1": 1, "2": 0}}'))
    assert parse_graph(graph_to_json(g)) == g


def test_load_coloring(data_dir: Path) -> None:
    coloring = load_coloring(data_dir / "p3.coloring.json")
    assert coloring.colors == {0: 0, 1: 1, 2: 0}
    assert coloring.m == 2


def test_apply_partial_coloring() -> None:
    with pytest.raises(ColoringError, match="uncolored"):
        apply_coloring(path(3), Coloring(colors={0: 0, 1: 0}))


def test_apply_coloring_outside_vertex() -> None:
    with pytest.raises(ColoringError, match="outside"):
        apply_coloring(path(2), Coloring(colors={0: 0, 1: 0, 2: 0}))


@pytest.mark.parametrize(
    "text",
    [
        pytest.param('{"colors": {"0": -1}}', id="negative color"),
        pytest.param('{"colors": {"0": 2}, "num_colors": 2}', id="color out of range"),
        pytest.param('{"colors": {"-1": 0}}', id="negative vertex"),
        pytest.param("[1, 2]", id="not an object"),
    ],
)
def test_parse_coloring_invalid(text: str) -> None:
    with pytest.raises(ColoringError):
        parse_coloring(text)


def test_difflocal_winner_p4() -> None:
    g = uniform(path(4))
    for mode in DifflocalMode:
        assert difflocal_winner(g, 0, 3, 1, mode) == d_winner(g, (0,), (3,), 1)


def test_difflocal_modes_agree_with_full_game() -> None:
    for g in all_graphs_up_to(4):
        g = uniform(g)
        for (u, v), r in itertools.product(itertools.combinations(g.vertices, 2), (1, 2)):
            full = d_winner(g, (u,), (v,), r)
            assert difflocal_winner(g, u, v, r, DifflocalMode.DIRECT) == full
            assert difflocal_winner(g, u, v, r, DifflocalMode.XI) == full


@pytest.mark.parametrize("r, radius", [(0, 1), (1, 1), (2, 3), (3, 7)])
def test_default_radius(r: int, radius: int) -> None:
    assert default_radius(r) == radius


def test_difflocal_radius_at_least_rounds() -> None:
    for g in all_graphs_up_to(4):
        g = uniform(g)
        for u, v in itertools.combinations(g.vertices, 2):
            full = d_winner(g, (u,), (v,), 2)
            for radius in (2, 3, 4):
                assert difflocal_winner(g, u, v, 2, radius=radius) == full, (g, u, v)


def test_difflocal_winner_preconditions() -> None:
    with pytest.raises(UncoloredGraphError):
        difflocal_winner(path(3), 0, 2, 1)
    g = apply_coloring(path(3), Coloring(colors={0: 0, 1: 1, 2: 0}))
    with pytest.raises(UndefinedPairError):
        difflocal_winner(g, 0, 1, 1)


def test_dn_census_p4() -> None:
    census = dn_census(uniform(path(4)), 1)
    sizes = {(row.u, row.v): row.dn_size for row in census.rows}
    assert sizes[(0, 3)] == 4
    assert census.pairs == 6
    assert census.max_size == 4
    assert census.disagreements == []


def test_dn_census_edgeless() -> None:
    g = apply_coloring(edgeless(4), Coloring(colors={0: 0, 1: 0, 2: 1, 3: 1}))
    for r in (1, 2, 3):
        census = dn_census(g, r)
        assert [(row.u, row.v) for row in census.rows] == [(0, 1), (2, 3)]
        assert all(row.dn_size == 2 for row in census.rows)
        assert census.mean_size == 2.0


def test_dn_census_rounds_and_threads() -> None:
    g = uniform(path(5))
    census = dn_census(g, 2, rounds=1, threads=2)
    assert census.rounds == 1
    assert census.rows == dn_census(g, 2, rounds=1).rows
    assert all(row.agree for row in census.rows)


def test_dn_census_table() -> None:
    census = dn_census(uniform(path(3)), 1)
    cols, rows = census.__cols_rows__()
    assert cols == snapshot(["u", "v", "Color", "|DN|", "Local", "Full", "Agree"])
    assert len(rows) == census.pairs + 1


def test_dn_census_uncolored() -> None:
    with pytest.raises(UncoloredGraphError):
        dn_census(path(3), 1)
