from __future__ import annotations

import pytest

from diffmc.exceptions import UnboundVariableError
from diffmc.exceptions import VertexError
from diffmc.graphs.generators import complete
from diffmc.graphs.generators import edgeless
from diffmc.graphs.generators import path
from diffmc.graphs.graph import LabeledGraph
from diffmc.logic.formula import BOTTOM
from diffmc.logic.formula import TOP
from diffmc.logic.formula import Edge
from diffmc.logic.formula import conj
from diffmc.logic.formula import disj
from diffmc.logic.formula import free_variables
from diffmc.logic.formula import is_sentence
from diffmc.logic.formula import is_well_named
from diffmc.logic.formula import labels_used
from diffmc.logic.formula import quantifier_count
from diffmc.logic.formula import quantifier_rank
from diffmc.logic.formula import variables
from diffmc.logic.parser import parse_formula
from diffmc.logic.semantics import evaluate


def test_free_and_bound_variables() -> None:
    phi = parse_formula("exists y. (E(x,y) & (forall z. z=y))")
    assert free_variables(phi) == {"x"}
    assert variables(phi) == {"x", "y", "z"}
    assert not is_sentence(phi)
    assert is_sentence(parse_formula("exists x. x=x"))


def test_quantifier_rank_and_count() -> None:
    phi = parse_formula("(exists x. forall y. E(x,y)) & (exists z. z=z)")
    assert quantifier_rank(phi) == 2
    assert quantifier_count(phi) == 3
    assert quantifier_rank(Edge("x", "y")) == 0


def test_well_named() -> None:
    assert is_well_named(parse_formula("(exists x. true) & (exists x. false)"))
    assert not is_well_named(parse_formula("exists x. exists x. E(x,x)"))


def test_labels_used() -> None:
    phi = parse_formula("exists x. (L[red](x) | !L[blue](x) | L[red](x))")
    assert labels_used(phi) == {"red", "blue"}


def test_empty_conjunction_and_disjunction() -> None:
    assert conj([]) == TOP
    assert disj([]) == BOTTOM
    assert conj([Edge("x", "y")]) == Edge("x", "y")


@pytest.mark.parametrize(
    "g, text, expect",
    [
        pytest.param(path(3), "forall x. exists y. E(x,y)", True, id="no isolated vertex"),
        pytest.param(edgeless(2), "forall x. exists y. E(x,y)", False, id="edgeless"),
        pytest.param(path(1), "exists x. x=x", True, id="nonempty"),
        pytest.param(path(3), "exists x. forall y. (x=y | E(x,y))", True, id="dominating"),
        pytest.param(path(4), "exists x. forall y. (x=y | E(x,y))", False, id="P4 not dominated"),
        pytest.param(
            complete(3),
            "exists x. exists y. exists z. (E(x,y) & E(y,z) & E(x,z))",
            True,
            id="triangle",
        ),
        pytest.param(path(3), "exists x. L[red](x)", False, id="absent label"),
        pytest.param(
            path(3).with_labels({1: ["red"]}),
            "forall x. (L[red](x) <-> (exists y. exists z. (E(x,y) & E(x,z) & !y=z)))",
            True,
            id="label on the middle vertex",
        ),
        pytest.param(
            path(2).with_colors({0: 0, 1: 1}),
            "exists x. (L[color:0](x) & (exists y. (E(x,y) & L[color:1](y))))",
            True,
            id="colors are labels",
        ),
        pytest.param(path(2), "true -> false", False, id="constants"),
    ],
)
def test_evaluate_sentences(g: LabeledGraph, text: str, expect: bool) -> None:
    assert evaluate(g, parse_formula(text)) is expect


def test_evaluate_with_assignment() -> None:
    g = path(2)
    assert evaluate(g, parse_formula("E(x,y)"), {"x": 0, "y": 1})
    assert not evaluate(g, parse_formula("E(x,y)"), {"x": 0, "y": 0})
    # quantifiers shadow the assignment
    assert evaluate(g, parse_formula("exists x. E(x,y)"), {"x": 1, "y": 1})


def test_evaluate_unbound_variable() -> None:
    with pytest.raises(UnboundVariableError):
        evaluate(path(2), parse_formula("E(x,y)"), {"x": 0})


def test_evaluate_vertex_outside_graph() -> None:
    with pytest.raises(VertexError):
        evaluate(path(2), parse_formula("x=x"), {"x": 2})


def test_evaluate_empty_graph() -> None:
    g = LabeledGraph(0)
    assert not evaluate(g, parse_formula("exists x. true"))
    assert evaluate(g, parse_formula("forall x. false"))

