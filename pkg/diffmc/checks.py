"""Property suites run by `diffmc check`.

Every suite walks a family of small instances (exhaustively enumerated
graphs, path and cycle families, seeded random graphs) and yields one
outcome per instance: None when the property holds, a `Counterexample`
when it does not.
"""

from __future__ import annotations

import itertools
import logging
import time
from collections.abc import Iterable
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Callable
from typing import Optional

from pydantic import BaseModel
from pydantic import Field
from pydantic import JsonValue
from strenum import StrEnum

from diffmc.config.constants import Engine
from diffmc.config.model import CheckConfig
from diffmc.difflocal import DifflocalMode
from diffmc.difflocal import apply_coloring
from diffmc.difflocal import atomic_type_coloring
from diffmc.difflocal import difflocal_winner
from diffmc.difflocal import dn_census
from diffmc.difflocal import refine_coloring
from diffmc.difflocal import uniform_coloring
from diffmc.engine.mc import model_check
from diffmc.exceptions import UnknownSuiteError
from diffmc.games.solver import Winner
from diffmc.games.solver import d_winner
from diffmc.games.solver import ef_winner
from diffmc.games.solver import l_of
from diffmc.games.solver import sd_winner
from diffmc.games.trace import touched_vertices
from diffmc.graphs import generators
from diffmc.graphs.graph import LabeledGraph
from diffmc.graphs.io import GraphDocument
from diffmc.graphs.neighborhoods import differential_neighborhood
from diffmc.graphs.neighborhoods import distance
from diffmc.logic.corpus import non_prenex_sentences
from diffmc.logic.corpus import pinned_formulas
from diffmc.logic.corpus import sentences
from diffmc.logic.formula import format_formula
from diffmc.logic.interpretation import apply_interpretation
from diffmc.logic.parser import parse_formula
from diffmc.logic.pinning import OUTPUT_VARIABLE
from diffmc.logic.pinning import pin_tuple_labels
from diffmc.logic.pinning import rewrite_with_pinned_tuple
from diffmc.logic.pinning import tuple_variable
from diffmc.logic.semantics import compile_formula
from diffmc.logic.semantics import evaluate
from diffmc.logic.xi import x_var
from diffmc.logic.xi import xi_formula
from diffmc.logic.xi import y_var
from diffmc.models import ColsRowsType
from diffmc.models import TableRenderable
from diffmc.output.style import Emoji
from diffmc.relations import RelationKind
from diffmc.relations import components
from diffmc.relations import fo_type_equiv
from diffmc.relations import relation_graph

logger = logging.getLogger(__name__)

COMPLEMENT_INTERPRETATION = "!E(x,y) & !x=y"


class CheckSuite(StrEnum):
    RESTRICTION = "restriction"
    EF_COMPONENTS = "ef_components"
    LOCALITY = "locality"
    COMPLEMENT = "complement"
    XI_AGREEMENT = "xi_agreement"
    ORACLE_EQUIV = "oracle_equiv"
    DN_LOCALITY = "dn_locality"
    MONOTONICITY = "monotonicity"
    TYPES = "types"
    HALF_GRAPH = "half_graph"
    PIN_REWRITE = "pin_rewrite"
    CONTAINMENT = "containment"


SUITE_ALIASES: dict[str, CheckSuite] = {
    "lemma51": CheckSuite.RESTRICTION,
    "lemma62": CheckSuite.EF_COMPONENTS,
    "lemma61": CheckSuite.LOCALITY,
    "lemma65": CheckSuite.COMPLEMENT,
}
"""Short names accepted by `check` for the first four suites."""


class CheckBounds(BaseModel):
    """Instance bounds of a suite run. Unset bounds take the suite defaults."""

    max_n: Optional[int] = Field(default=None, ge=1)
    max_m: Optional[int] = Field(default=None, ge=0)
    """Rounds, quantifier rank or radius, depending on the suite."""
    max_k: int = Field(default=2, ge=1)
    """Pinned tuple length for `pin_rewrite`."""
    seed: int = CheckConfig().seed
    random_graphs: int = Field(default=CheckConfig().random_graphs, ge=0)
    random_sizes: list[int] = Field(default_factory=lambda: CheckConfig().random_sizes)
    edge_probability: float = Field(default=CheckConfig().edge_probability, ge=0, le=1)
    threads: int = Field(default=1, ge=1)

    @classmethod
    def from_config(cls, config: CheckConfig, **overrides: object) -> CheckBounds:
        values = {
            "seed": config.seed,
            "random_graphs": config.random_graphs,
            "random_sizes": config.random_sizes,
            "edge_probability": config.edge_probability,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls.model_validate(values)


class Counterexample(BaseModel):
    graph: GraphDocument
    parameters: dict[str, JsonValue] = Field(default_factory=dict)
    observed: str
    expected: str


class CheckSuiteResult(TableRenderable):
    suite: CheckSuite
    instances: int = 0
    counterexamples: list[Counterexample] = Field(default_factory=list)
    elapsed: float = 0.0
    """Wall-clock seconds."""
    max_n: int
    max_m: int

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def __cols_rows__(self) -> ColsRowsType:
        cols = ["Suite", "Bounds", "Instances", "Counterexamples", "Elapsed", "Pass"]
        rows = [
            [
                self.suite,
                f"n <= {self.max_n}, m <= {self.max_m}",
                str(self.instances),
                str(len(self.counterexamples)),
                f"{self.elapsed:.2f}s",
                Emoji.fmt_bool(self.passed),
            ]
        ]
        return cols, rows


Outcome = Optional[Counterexample]
SuiteFunc = Callable[[int, int, CheckBounds], Iterator[Outcome]]


def _counterexample(
    g: LabeledGraph, observed: object, expected: object, **parameters: JsonValue
) -> Counterexample:
    return Counterexample(
        graph=GraphDocument.from_graph(g),
        parameters=parameters,
        observed=str(observed),
        expected=str(expected),
    )


def _pairs(g: LabeledGraph) -> Iterator[tuple[int, int]]:
    return itertools.combinations(g.vertices, 2)


def _random_graphs(bounds: CheckBounds) -> Iterator[LabeledGraph]:
    sizes = bounds.random_sizes or [6]
    for i in range(bounds.random_graphs):
        n = sizes[i % len(sizes)]
        yield generators.erdos_renyi(n, bounds.edge_probability, bounds.seed + i)


def check_restriction(max_n: int, max_m: int, bounds: CheckBounds) -> Iterator[Outcome]:
    """Spoiler wins the m-round EF game => Spoiler wins the l(m)-round
    semi-differential game."""
    for g in generators.all_graphs_up_to(max_n):
        for (u, v), m in itertools.product(_pairs(g), range(max_m + 1)):
            if ef_winner(g, (u,), g, (v,), m) == Winner.SPOILER:
                sd = sd_winner(g, (u,), (v,), l_of(m))
                if sd != Winner.SPOILER:
                    yield _counterexample(g, sd, Winner.SPOILER, u=u, v=v, m=m)
                    continue
            yield None


def check_ef_components(max_n: int, max_m: int, bounds: CheckBounds) -> Iterator[Outcome]:
    """Every m-round EF class is a union of components of the l(m)-round
    differential relation."""
    for g in generators.all_graphs_up_to(max_n):
        for m in range(max_m + 1):
            relation = relation_graph(g, RelationKind.D_GAME, l_of(m), threads=bounds.threads)
            for comp in components(relation):
                split = [
                    v
                    for v in comp[1:]
                    if ef_winner(g, (comp[0],), g, (v,), m) != Winner.DUPLICATOR
                ]
                if split:
                    yield _counterexample(
                        g,
                        f"component {list(comp)} spans EF classes",
                        "component inside one class",
                        m=m,
                        component=list(comp),
                    )
                else:
                    yield None


def check_locality(max_n: int, max_m: int, bounds: CheckBounds) -> Iterator[Outcome]:
    """On paths and cycles, EF-equivalent vertices further apart than 2m
    are m-round differential equivalent."""
    graphs = itertools.chain(
        (generators.path(n) for n in range(1, max_n + 1)),
        (generators.cycle(n) for n in range(3, max_n + 1)),
    )
    for g in graphs:
        for m in range(1, max_m + 1):
            for u, v in _pairs(g):
                if distance(g, u, v) <= 2 * m:
                    continue
                if ef_winner(g, (u,), g, (v,), m) != Winner.DUPLICATOR:
                    continue
                d = d_winner(g, (u,), (v,), m)
                if d != Winner.DUPLICATOR:
                    yield _counterexample(g, d, Winner.DUPLICATOR, u=u, v=v, m=m)
                else:
                    yield None


def check_complement(max_n: int, max_m: int, bounds: CheckBounds) -> Iterator[Outcome]:
    """(m+1)-round differential equivalence in G survives as m-round
    equivalence in the complement of G."""
    psi = parse_formula(COMPLEMENT_INTERPRETATION)
    for g in generators.all_graphs_up_to(max_n):
        h = apply_interpretation(g, psi)
        for (u, v), m in itertools.product(_pairs(g), range(max_m + 1)):
            if d_winner(g, (u,), (v,), m + 1) != Winner.DUPLICATOR:
                continue
            got = d_winner(h, (u,), (v,), m)
            if got != Winner.DUPLICATOR:
                yield _counterexample(g, got, Winner.DUPLICATOR, u=u, v=v, m=m)
            else:
                yield None


def check_xi_agreement(max_n: int, max_m: int, bounds: CheckBounds) -> Iterator[Outcome]:
    """The game formula holds at (u, v) iff Duplicator wins the
    differential game."""
    for g in generators.all_graphs_up_to(max_n):
        for m in range(max_m + 1):
            xi = compile_formula(xi_formula(m, 1, g.label_alphabet()))
            for u, v in itertools.product(g.vertices, repeat=2):
                holds = xi(g, {x_var(1): u, y_var(1): v})
                d = d_winner(g, (u,), (v,), m)
                if holds != (d == Winner.DUPLICATOR):
                    yield _counterexample(g, holds, d, u=u, v=v, m=m)
                else:
                    yield None


def check_oracle_equiv(max_n: int, max_m: int, bounds: CheckBounds) -> Iterator[Outcome]:
    """The reduced-tree engine agrees with brute-force evaluation."""
    corpus = (*sentences(), *non_prenex_sentences())
    graphs = itertools.chain(generators.all_graphs_up_to(max_n), _random_graphs(bounds))
    for g in graphs:
        for phi in corpus:
            brute = evaluate(g, phi)
            tree = model_check(g, phi, Engine.DIFFTREE, threads=bounds.threads)
            if tree.verdict != brute:
                yield _counterexample(
                    g, tree.verdict, brute, sentence=format_formula(phi)
                )
            else:
                yield None


def _colorings(max_n: int) -> Iterator[LabeledGraph]:
    """Every graph up to max_n under the uniform coloring, and with vertex
    0 labelled under the atomic-type coloring."""
    for g in generators.all_graphs_up_to(max_n):
        yield apply_coloring(g, uniform_coloring(g))
        labelled = g.with_labels({0: ["red"]})
        yield apply_coloring(labelled, atomic_type_coloring(labelled))


def check_dn_locality(max_n: int, max_m: int, bounds: CheckBounds) -> Iterator[Outcome]:
    """Games decided inside DN_r[u, v] agree with games on the whole graph,
    through both the solver and the game formula."""
    for g in _colorings(max_n):
        for r in range(1, max_m + 1):
            census = dn_census(g, r, threads=bounds.threads)
            if census.disagreements:
                yield _counterexample(
                    g,
                    f"disagreements at {census.disagreements}",
                    "no disagreements",
                    r=r,
                )
                continue
            bad = [
                (row.u, row.v)
                for row in census.rows
                if difflocal_winner(g, row.u, row.v, r, DifflocalMode.XI)
                != row.local_winner
                or not 2 <= row.dn_size <= g.n
            ]
            if bad:
                yield _counterexample(
                    g, f"mode disagreement at {bad}", "modes agree", r=r
                )
            else:
                yield None


def check_monotonicity(max_n: int, max_m: int, bounds: CheckBounds) -> Iterator[Outcome]:
    """A semi-differential Spoiler win is a differential Spoiler win, and
    refining a coloring never grows a differential neighbourhood."""
    for g in generators.all_graphs_up_to(max_n):
        for (u, v), m in itertools.product(_pairs(g), range(max_m + 1)):
            if sd_winner(g, (u,), (v,), m) != Winner.SPOILER:
                continue
            d = d_winner(g, (u,), (v,), m)
            if d != Winner.SPOILER:
                yield _counterexample(g, d, Winner.SPOILER, u=u, v=v, m=m, game="sd")
            else:
                yield None

        coarse = uniform_coloring(g)
        fine = refine_coloring(coarse, {v: v % 2 for v in g.vertices})
        gc, gf = apply_coloring(g, coarse), apply_coloring(g, fine)
        for r in range(1, max_m + 1):
            for u, v in _pairs(gf):
                if gf.color(u) != gf.color(v):
                    continue
                before = len(differential_neighborhood(gc, u, v, r, closed=True))
                after = len(differential_neighborhood(gf, u, v, r, closed=True))
                if after > before:
                    yield _counterexample(
                        g, after, f"<= {before}", u=u, v=v, r=r, game="coloring"
                    )
                else:
                    yield None


def check_types(max_n: int, max_m: int, bounds: CheckBounds) -> Iterator[Outcome]:
    """The EF solver and the type recursion agree on single vertices."""
    for g in generators.all_graphs_up_to(max_n):
        for (u, v), m in itertools.product(_pairs(g), range(max_m + 1)):
            game = ef_winner(g, (u,), g, (v,), m) == Winner.DUPLICATOR
            types = fo_type_equiv(g, (u,), (v,), m)
            if game != types:
                yield _counterexample(g, game, types, u=u, v=v, m=m)
            else:
                yield None


def check_half_graph(max_n: int, max_m: int, bounds: CheckBounds) -> Iterator[Outcome]:
    """Same-side vertices of a half-graph are told apart by the 1-round
    differential game."""
    for n in range(2, max_n + 1):
        g = generators.half_graph(n)
        relation = relation_graph(g, RelationKind.D_GAME, 1, threads=bounds.threads)
        for side in generators.half_graph_sides(n):
            for u, v in itertools.combinations(side, 2):
                if relation.related(u, v):
                    yield _counterexample(
                        g, Winner.DUPLICATOR, Winner.SPOILER, u=u, v=v, n=n
                    )
                else:
                    yield None


def check_pin_rewrite(max_n: int, max_m: int, bounds: CheckBounds) -> Iterator[Outcome]:
    """Pinning a tuple into labels and rewriting the formula preserves
    truth."""
    for g in generators.all_graphs_up_to(max_n):
        for k in range(1, bounds.max_k + 1):
            formulas = pinned_formulas(k)
            for vs in itertools.product(g.vertices, repeat=k):
                pinned = pin_tuple_labels(g, vs)
                env = {tuple_variable(i): v for i, v in enumerate(vs, start=1)}
                for phi in formulas:
                    rewritten = rewrite_with_pinned_tuple(phi, g, vs)
                    for u in g.vertices:
                        want = evaluate(g, phi, {**env, tuple_variable(k + 1): u})
                        got = evaluate(pinned, rewritten, {OUTPUT_VARIABLE: u})
                        if got != want:
                            yield _counterexample(
                                g,
                                got,
                                want,
                                formula=format_formula(phi),
                                tuple=list(vs),
                                u=u,
                            )
                        else:
                            yield None


def check_containment(max_n: int, max_m: int, bounds: CheckBounds) -> Iterator[Outcome]:
    """Every vertex played in an r-round differential game from (u, v)
    lies in DN_r[u, v]."""
    for g in generators.all_graphs_up_to(max_n):
        gc = apply_coloring(g, uniform_coloring(g))
        for r in range(1, max_m + 1):
            for u, v in _pairs(gc):
                dn = set(differential_neighborhood(gc, u, v, r, closed=True))
                outside = sorted(touched_vertices(gc, (u,), (v,), r) - dn)
                if outside:
                    yield _counterexample(
                        g, f"played {outside}", f"inside {sorted(dn)}", u=u, v=v, r=r
                    )
                else:
                    yield None


@dataclass(frozen=True)
class SuiteInfo:
    func: SuiteFunc
    max_n: int
    max_m: int


SUITES: dict[CheckSuite, SuiteInfo] = {
    CheckSuite.RESTRICTION: SuiteInfo(check_restriction, 5, 2),
    CheckSuite.EF_COMPONENTS: SuiteInfo(check_ef_components, 5, 2),
    CheckSuite.LOCALITY: SuiteInfo(check_locality, 12, 2),
    CheckSuite.COMPLEMENT: SuiteInfo(check_complement, 6, 2),
    CheckSuite.XI_AGREEMENT: SuiteInfo(check_xi_agreement, 5, 2),
    CheckSuite.ORACLE_EQUIV: SuiteInfo(check_oracle_equiv, 5, 3),
    CheckSuite.DN_LOCALITY: SuiteInfo(check_dn_locality, 5, 2),
    CheckSuite.MONOTONICITY: SuiteInfo(check_monotonicity, 5, 3),
    CheckSuite.TYPES: SuiteInfo(check_types, 5, 2),
    CheckSuite.HALF_GRAPH: SuiteInfo(check_half_graph, 8, 1),
    CheckSuite.PIN_REWRITE: SuiteInfo(check_pin_rewrite, 4, 2),
    CheckSuite.CONTAINMENT: SuiteInfo(check_containment, 5, 2),
}
"""Suites with their default bounds (max n, max rounds)."""


def get_suite(name: str) -> CheckSuite:
    """Look up a suite by name or alias. Case and dashes are ignored."""
    key = name.strip().lower().replace("-", "_")
    if key in SUITE_ALIASES:
        return SUITE_ALIASES[key]
    try:
        return CheckSuite(key)
    except ValueError as e:
        valid = ", ".join(s.value for s in CheckSuite)
        raise UnknownSuiteError(f"Unknown check suite {name!r}. Choose from: {valid}") from e


def _collect(
    suite: CheckSuite, outcomes: Iterable[Outcome], result: CheckSuiteResult
) -> None:
    for outcome in outcomes:
        result.instances += 1
        if outcome is not None:
            logger.warning("%s counterexample: %s", suite, outcome.model_dump_json())
            result.counterexamples.append(outcome)


def run_suite(name: str, bounds: Optional[CheckBounds] = None) -> CheckSuiteResult:
    """Run a property suite and collect its counterexamples.

    Raises:
        UnknownSuiteError: No suite has this name.
    """
    suite = get_suite(name)
    info = SUITES[suite]
    bounds = bounds or CheckBounds()
    max_n = info.max_n if bounds.max_n is None else bounds.max_n
    max_m = info.max_m if bounds.max_m is None else bounds.max_m
    result = CheckSuiteResult(suite=suite, max_n=max_n, max_m=max_m)
    logger.info("Running check suite %s (n <= %d, m <= %d)", suite, max_n, max_m)
    start = time.perf_counter()
    _collect(suite, info.func(max_n, max_m, bounds), result)
    result.elapsed = round(time.perf_counter() - start, 3)
    logger.info(
        "Suite %s: %d instances, %d counterexamples",
        suite,
        result.instances,
        len(result.counterexamples),
    )
    return result


__all__ = [
    "CheckBounds",
    "CheckSuite",
    "CheckSuiteResult",
    "Counterexample",
    "run_suite",
]
