"""Model checking pipelines."""

from __future__ import annotations

import functools
import logging
from typing import Optional

from pydantic import Field

from diffmc.config.constants import DEFAULT_MAX_FULL_TREE_POSITIONS
from diffmc.config.constants import Engine
from diffmc.config.constants import RepresentativeMode
from diffmc.engine.trees import RepresentativeOracle
from diffmc.engine.trees import full_tree
from diffmc.engine.trees import reduced_tree
from diffmc.engine.trees import verdict_from_tree
from diffmc.exceptions import OpenFormulaError
from diffmc.exceptions import UncoloredGraphError
from diffmc.graphs.graph import LabeledGraph
from diffmc.logic.formula import Formula
from diffmc.logic.formula import free_variables
from diffmc.logic.prenex import as_prenex
from diffmc.logic.semantics import evaluate
from diffmc.models import ColsRowsType
from diffmc.models import TableRenderable
from diffmc.output.style import Emoji
from diffmc.relations import RelationKind
from diffmc.relations import RepresentativeStats
from diffmc.relations import representatives

logger = logging.getLogger(__name__)


class ModelCheckResult(TableRenderable):
    """Verdict and diagnostics of one model checking run."""

    engine: Engine
    tree_nodes: Optional[int] = None
    level_branching: list[int] = Field(default_factory=list)
    relation_calls: int = 0
    verdict: bool

    def __cols_rows__(self) -> ColsRowsType:
        cols = ["Engine", "Verdict", "Tree nodes", "Branching", "Relations"]
        rows = [
            [
                self.engine,
                Emoji.fmt_bool(self.verdict),
                "" if self.tree_nodes is None else str(self.tree_nodes),
                " ".join(map(str, self.level_branching)),
                str(self.relation_calls),
            ]
        ]
        return cols, rows


def model_check(
    g: LabeledGraph,
    phi: Formula,
    engine: Engine = Engine.DIFFTREE,
    *,
    mode: RepresentativeMode = RepresentativeMode.INDEPENDENT,
    threads: int = 1,
    rep_fn: Optional[RepresentativeOracle] = None,
    max_positions: int = DEFAULT_MAX_FULL_TREE_POSITIONS,
) -> ModelCheckResult:
    """Decide G ⊨ φ.

    `brute` evaluates φ recursively. `fulltree` reads the verdict off the
    tree of all assignments, refusing trees with more than `max_positions`
    leaves. `difftree` converts φ to prenex form, builds the reduced
    evaluation tree over differential game representatives and reads the
    verdict off it. `difflocal` does the same with games decided inside
    differential neighbourhoods and needs a colored graph. `rep_fn`
    replaces the representative oracle of the reduced tree engines.

    Raises:
        OpenFormulaError: φ has free variables.
        UncoloredGraphError: engine `difflocal` on an uncolored graph.
        SizeGuardError: engine `fulltree` on a tree that is too large.
    """
    engine = Engine(engine)
    free = free_variables(phi)
    if free:
        raise OpenFormulaError(
            f"Model checking needs a sentence; free variables: {', '.join(sorted(free))}"
        )
    if engine == Engine.BRUTE:
        return ModelCheckResult(engine=engine, verdict=evaluate(g, phi))
    if engine == Engine.DIFFLOCAL and not g.is_colored:
        raise UncoloredGraphError(
            "The difflocal engine needs a colored graph; pass a coloring or a preset"
        )

    stats = RepresentativeStats()
    if rep_fn is None:
        kind = RelationKind.DIFFLOCAL if engine == Engine.DIFFLOCAL else RelationKind.D_GAME
        rep_fn = functools.partial(
            representatives, mode=mode, kind=kind, stats=stats, threads=threads
        )
    prenex = as_prenex(phi)
    if engine == Engine.FULLTREE:
        tree = full_tree(g, prenex.q, max_positions=max_positions)
    else:
        tree = reduced_tree(g, prenex.q, rep_fn)
    verdict = verdict_from_tree(tree, g, prenex)
    logger.debug("%s verdict %s on %r", engine, verdict, g)
    return ModelCheckResult(
        engine=engine,
        tree_nodes=tree.size(),
        level_branching=tree.level_branching(),
        relation_calls=stats.relation_builds,
        verdict=verdict,
    )

