"""Brute-force first-order semantics over a `LabeledGraph`.

Formulas are compiled once into nested closures and cached, so repeated
evaluation of the same formula over many graphs and assignments does not
walk the syntax tree again.
"""

from __future__ import annotations

import functools
import logging
from collections.abc import Mapping
from typing import Callable
from typing import Optional

from diffmc.exceptions import UnboundVariableError
from diffmc.graphs.graph import LabeledGraph
from diffmc.logic.formula import And
from diffmc.logic.formula import Bottom
from diffmc.logic.formula import Edge
from diffmc.logic.formula import Eq
from diffmc.logic.formula import Exists
from diffmc.logic.formula import Forall
from diffmc.logic.formula import Formula
from diffmc.logic.formula import Iff
from diffmc.logic.formula import Implies
from diffmc.logic.formula import Label
from diffmc.logic.formula import Not
from diffmc.logic.formula import Or
from diffmc.logic.formula import Top
from diffmc.logic.formula import free_variables

logger = logging.getLogger(__name__)

Env = dict[str, int]
Evaluator = Callable[[LabeledGraph, Env], bool]


def _const(value: bool) -> Evaluator:
    def run(g: LabeledGraph, env: Env) -> bool:
        return value

    return run


def _quantifier(var: str, body: Evaluator, *, universal: bool) -> Evaluator:
    def run(g: LabeledGraph, env: Env) -> bool:
        saved = env.get(var)
        try:
            for v in g.vertices:
                env[var] = v
                if body(g, env) != universal:
                    return not universal
            return universal
        finally:
            if saved is None:
                env.pop(var, None)
            else:
                env[var] = saved

    return run


@functools.lru_cache(maxsize=4096)
def compile_formula(phi: Formula) -> Evaluator:
    """Compile a formula into a function of (graph, assignment)."""
    if isinstance(phi, Top):
        return _const(True)
    if isinstance(phi, Bottom):
        return _const(False)
    if isinstance(phi, Edge):
        left, right = phi.left, phi.right
        return lambda g, env: bool(g.neighbor_mask(env[left]) >> env[right] & 1)
    if isinstance(phi, Eq):
        left, right = phi.left, phi.right
        return lambda g, env: env[left] == env[right]
    if isinstance(phi, Label):
        label, var = phi.label, phi.var
        # labels absent from the graph are simply false
        return lambda g, env: label in g.atomic_labels[env[var]]
    if isinstance(phi, Not):
        body = compile_formula(phi.body)
        return lambda g, env: not body(g, env)
    if isinstance(phi, And):
        a, b = compile_formula(phi.left), compile_formula(phi.right)
        return lambda g, env: a(g, env) and b(g, env)
    if isinstance(phi, Or):
        a, b = compile_formula(phi.left), compile_formula(phi.right)
        return lambda g, env: a(g, env) or b(g, env)
    if isinstance(phi, Implies):
        a, b = compile_formula(phi.left), compile_formula(phi.right)
        return lambda g, env: (not a(g, env)) or b(g, env)
    if isinstance(phi, Iff):
        a, b = compile_formula(phi.left), compile_formula(phi.right)
        return lambda g, env: a(g, env) == b(g, env)
    if isinstance(phi, Exists):
        return _quantifier(phi.var, compile_formula(phi.body), universal=False)
    if isinstance(phi, Forall):
        return _quantifier(phi.var, compile_formula(phi.body), universal=True)
    raise TypeError(f"Not a formula: {phi!r}")


def evaluate(
    g: LabeledGraph,
    phi: Formula,
    assignment: Optional[Mapping[str, int]] = None,
) -> bool:
    """Truth value of `phi` in `g` under `assignment`.

    Quantifiers range over all vertices of `g`. A label atom is false on
    vertices without that label, including labels `g` never uses.

    Raises:
        UnboundVariableError: A free variable of `phi` has no value.
        VertexError: The assignment maps a variable outside the graph.
    """
    env: Env = dict(assignment or {})
    missing = free_variables(phi) - env.keys()
    if missing:
        raise UnboundVariableError(
            f"No value for free variable(s): {', '.join(sorted(missing))}"
        )
    for v in env.values():
        g.check_vertex(v)
    return compile_formula(phi)(g, env)

