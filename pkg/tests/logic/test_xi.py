from __future__ import annotations

import pytest

from diffmc.exceptions import InputError
from diffmc.games.solver import Player
from diffmc.games.solver import d_winner
from diffmc.graphs.generators import all_graphs_up_to
from diffmc.graphs.generators import half_graph
from diffmc.graphs.graph import LabeledGraph
from diffmc.logic.formula import TOP
from diffmc.logic.formula import free_variables
from diffmc.logic.formula import is_well_named
from diffmc.logic.formula import quantifier_rank
from diffmc.logic.semantics import evaluate
from diffmc.logic.xi import differs
from diffmc.logic.xi import xi_formula


def test_xi_zero_without_labels_is_true() -> None:
    assert xi_formula(0, 1) == TOP


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_xi_quantifier_rank(m: int) -> None:
    assert quantifier_rank(xi_formula(m)) == 2 * m


def test_xi_free_variables_and_naming() -> None:
    phi = xi_formula(2, 2, ["red"])
    assert free_variables(phi) == {"x_1", "x_2", "y_1", "y_2"}
    assert is_well_named(phi)


def test_xi_same_vertex_always_holds() -> None:
    g = half_graph(2)
    phi = xi_formula(2)
    for u in g.vertices:
        assert evaluate(g, phi, {"x_1": u, "y_1": u})


def test_differs() -> None:
    g = half_graph(2)
    # vertex 1 is adjacent to 0 and 2 is not
    phi = differs("x", "y", "z")
    assert evaluate(g, phi, {"x": 0, "y": 2, "z": 1})
    assert not evaluate(g, phi, {"x": 0, "y": 2, "z": 3})


def _agrees_with_solver(g: LabeledGraph, m: int) -> None:
    phi = xi_formula(m, 1, g.label_alphabet())
    for a in g.vertices:
        for b in g.vertices:
            holds = evaluate(g, phi, {"x_1": a, "y_1": b})
            duplicator = d_winner(g, (a,), (b,), m) == Player.DUPLICATOR
            assert holds == duplicator, (g, a, b, m)


@pytest.mark.parametrize("m", [0, 1])
def test_xi_agrees_with_differential_game(m: int) -> None:
    for g in all_graphs_up_to(4):
        _agrees_with_solver(g, m)


def test_xi_agrees_with_differential_game_two_rounds() -> None:
    for g in all_graphs_up_to(3):
        _agrees_with_solver(g, 2)
    _agrees_with_solver(half_graph(2), 2)


def test_xi_agrees_on_labeled_graph() -> None:
    g = half_graph(2).with_labels({0: ["red"], 3: ["red"]})
    for m in range(3):
        _agrees_with_solver(g, m)


@pytest.mark.parametrize(
    "m, k",
    [
        pytest.param(-1, 1, id="negative rounds"),
        pytest.param(1, 0, id="empty tuples"),
    ],
)
def test_xi_invalid(m: int, k: int) -> None:
    with pytest.raises(InputError):
        xi_formula(m, k)
