"""Replacing a pinned vertex tuple by labels.

A tuple v̄ = (v_1..v_k) is pinned into a graph by giving v_i the label
`pin:i` and every neighbour of v_i the label `pinN:i`. A formula φ(x_1..x_k,
x_{k+1}) is then rewritten into a formula φ'(x) with one free variable, such
that G ⊨ φ(v̄, u) iff the pinned graph satisfies φ'(u).
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Mapping
from collections.abc import Sequence
from typing import Optional
from typing import Union

from diffmc.exceptions import FreeVariableError
from diffmc.graphs.graph import LabeledGraph
from diffmc.logic.formula import BOTTOM
from diffmc.logic.formula import TOP
from diffmc.logic.formula import And
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
from diffmc.logic.formula import free_variables
from diffmc.logic.formula import variables

logger = logging.getLogger(__name__)

PIN_PREFIX = "pin:"
PIN_NEIGHBOR_PREFIX = "pinN:"
OUTPUT_VARIABLE = "x"


def pin_label(i: int) -> str:
    return f"{PIN_PREFIX}{i}"


def pin_neighbor_label(i: int) -> str:
    return f"{PIN_NEIGHBOR_PREFIX}{i}"


def tuple_variable(i: int) -> str:
    return f"x_{i}"


def pin_tuple_labels(g: LabeledGraph, vs: Sequence[int]) -> LabeledGraph:
    """G with `pin:i` on v_i and `pinN:i` on each neighbour of v_i (1-based i).

    Existing labels are kept. The empty tuple returns G itself.
    """
    g.check_vertices(vs)
    if not vs:
        return g
    extra: dict[int, set[str]] = {}
    for i, v in enumerate(vs, start=1):
        extra.setdefault(v, set()).add(pin_label(i))
        for w in g.neighbors(v):
            extra.setdefault(w, set()).add(pin_neighbor_label(i))
    return g.with_labels(extra)


class _Pinned:
    """Reference to the i-th pinned vertex inside a rewrite."""

    __slots__ = ("index", "vertex")

    def __init__(self, index: int, vertex: int) -> None:
        self.index = index
        self.vertex = vertex


_Ref = Union[_Pinned, str]


def _edge(g: LabeledGraph, a: _Ref, b: _Ref) -> Formula:
    if isinstance(a, _Pinned) and isinstance(b, _Pinned):
        return TOP if g.adjacent(a.vertex, b.vertex) else BOTTOM
    if isinstance(a, _Pinned):
        assert isinstance(b, str)
        return Label(pin_neighbor_label(a.index), b)
    if isinstance(b, _Pinned):
        return Label(pin_neighbor_label(b.index), a)
    return Edge(a, b)


def _eq(a: _Ref, b: _Ref) -> Formula:
    if isinstance(a, _Pinned) and isinstance(b, _Pinned):
        return TOP if a.vertex == b.vertex else BOTTOM
    if isinstance(a, _Pinned):
        assert isinstance(b, str)
        return Label(pin_label(a.index), b)
    if isinstance(b, _Pinned):
        return Label(pin_label(b.index), a)
    return Eq(a, b)


def _rewrite(
    phi: Formula,
    g: LabeledGraph,
    env: Mapping[str, _Ref],
    fresh: dict[str, str],
) -> Formula:
    if isinstance(phi, Edge):
        return _edge(g, env[phi.left], env[phi.right])
    if isinstance(phi, Eq):
        return _eq(env[phi.left], env[phi.right])
    if isinstance(phi, Label):
        ref = env[phi.var]
        if isinstance(ref, _Pinned):
            return TOP if g.has_label(ref.vertex, phi.label) else BOTTOM
        return Label(phi.label, ref)
    if isinstance(phi, Not):
        return Not(_rewrite(phi.body, g, env, fresh))
    if isinstance(phi, (And, Or, Implies, Iff)):
        left = _rewrite(phi.left, g, env, fresh)
        right = _rewrite(phi.right, g, env, fresh)
        return type(phi)(left, right)
    if isinstance(phi, (Exists, Forall)):
        # a bound variable shadows a pinned one; a bound "x" would capture
        # the output variable and is renamed
        name = fresh.get(phi.var, phi.var)
        body = _rewrite(phi.body, g, {**env, phi.var: name}, fresh)
        return type(phi)(name, body)
    return phi


def rewrite_with_pinned_tuple(
    phi: Formula,
    g: LabeledGraph,
    vs: Sequence[int],
    *,
    tuple_variables: Optional[Sequence[str]] = None,
) -> Formula:
    """Rewrite φ(x_1..x_k, x_{k+1}) for the pinned tuple `vs` of length k.

    Atoms between two pinned variables become `true`/`false` according to G,
    `x_i = t` becomes `L[pin:i](t)` and `E(x_i, t)` becomes `L[pinN:i](t)`,
    where t is x_{k+1} or a bound variable. Label atoms on pinned variables
    become constants. The free variable x_{k+1} is renamed to `x`. With k = 0
    the formula is returned unchanged.

    Raises:
        FreeVariableError: φ has free variables other than x_1..x_{k+1}.
    """
    g.check_vertices(vs)
    k = len(vs)
    names = list(tuple_variables or [tuple_variable(i) for i in range(1, k + 2)])
    if len(names) != k + 1:
        raise FreeVariableError(f"Expected {k + 1} tuple variables, got {len(names)}")
    extra = free_variables(phi) - set(names)
    if extra:
        raise FreeVariableError(
            f"Unexpected free variable(s) {', '.join(sorted(extra))}; "
            f"expected a subset of {', '.join(names)}"
        )
    if k == 0:
        return phi

    env: dict[str, _Ref] = {
        name: _Pinned(i, v) for i, (name, v) in enumerate(zip(names, vs), start=1)
    }
    env[names[k]] = OUTPUT_VARIABLE
    taken = variables(phi) | {OUTPUT_VARIABLE}
    fresh: dict[str, str] = {}
    if OUTPUT_VARIABLE in variables(phi) and OUTPUT_VARIABLE != names[k]:
        candidates = (f"{OUTPUT_VARIABLE}_b{i}" for i in itertools.count(1))
        fresh[OUTPUT_VARIABLE] = next(c for c in candidates if c not in taken)
    return _rewrite(phi, g, env, fresh)

