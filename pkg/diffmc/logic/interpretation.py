"""Graph interpretations: new edges defined by a formula ψ(x, y)."""

from __future__ import annotations

import logging

from diffmc.exceptions import FreeVariableError
from diffmc.graphs.graph import LabeledGraph
from diffmc.logic.formula import Formula
from diffmc.logic.formula import format_formula
from diffmc.logic.formula import free_variables
from diffmc.logic.semantics import compile_formula

logger = logging.getLogger(__name__)


def apply_interpretation(
    g: LabeledGraph,
    psi: Formula,
    *,
    x: str = "x",
    y: str = "y",
    copy_labels: bool = False,
) -> LabeledGraph:
    """The graph H on V(G) with an edge uv iff G satisfies the symmetric,
    irreflexive closure of ψ at (u, v).

    H carries no labels or colors unless `copy_labels` is set.

    Raises:
        FreeVariableError: ψ does not have exactly the free variables x and y.
    """
    free = free_variables(psi)
    if free != {x, y}:
        raise FreeVariableError(
            f"Interpretation formula must have free variables {{{x}, {y}}}, "
            f"got {{{', '.join(sorted(free))}}}"
        )
    run = compile_formula(psi)
    edges = [
        (u, v)
        for u in g.vertices
        for v in range(u + 1, g.n)
        if run(g, {x: u, y: v}) or run(g, {x: v, y: u})
    ]
    logger.debug(
        "Interpretation %s gives %d edges on %d vertices",
        format_formula(psi),
        len(edges),
        g.n,
    )
    if not copy_labels:
        return LabeledGraph(g.n, edges)
    return LabeledGraph(
        g.n,
        edges,
        labels={v: g.stored_labels(v) for v in g.vertices},
        colors={v: c for v, c in enumerate(g.colors) if c is not None},
    )
