"""Colored graphs and games inside differential neighbourhoods.

A coloring is always supplied by the caller, from a file or one of the
presets. Every pairwise computation here reads the colors stored on the
`LabeledGraph`.
"""

from __future__ import annotations

import logging
import statistics
from collections.abc import Hashable
from collections.abc import Mapping
from pathlib import Path
from typing import Optional

from pydantic import Field
from pydantic import ValidationError
from pydantic import model_validator
from strenum import StrEnum
from typing_extensions import Self

from diffmc.exceptions import ColoringError
from diffmc.exceptions import UncoloredGraphError
from diffmc.games.solver import Winner
from diffmc.games.solver import d_winner
from diffmc.games.solver import l_of
from diffmc.graphs.graph import LabeledGraph
from diffmc.graphs.graph import induced_subgraph
from diffmc.graphs.neighborhoods import differential_neighborhood
from diffmc.logic.semantics import evaluate
from diffmc.logic.xi import x_var
from diffmc.logic.xi import xi_formula
from diffmc.logic.xi import y_var
from diffmc.models import ColsRowsType
from diffmc.models import TableRenderable
from diffmc.output.style import Emoji
from diffmc.utils.concurrency import parallel_map
from diffmc.utils.fs import read_file

logger = logging.getLogger(__name__)


class ColoringPreset(StrEnum):
    UNIFORM = "uniform"
    """One color for every vertex."""

    ATOMIC_TYPE = "atomic_type"
    """One color per distinct label set."""


class DifflocalMode(StrEnum):
    DIRECT = "direct"
    """Solve the differential game on the neighbourhood."""

    XI = "xi"
    """Evaluate the game-defining formula on the neighbourhood."""


class Coloring(TableRenderable):
    """Vertex colors, `{"colors": {"0": 0, "1": 1}}` in JSON."""

    colors: dict[int, int] = Field(default_factory=dict)
    num_colors: Optional[int] = Field(default=None, ge=1)
    """Declared number of colors m; colors must lie in 0..m-1."""

    @model_validator(mode="after")
    def _check_colors(self) -> Self:
        for v, c in self.colors.items():
            if v < 0:
                raise ValueError(f"vertex {v} is negative")
            if c < 0:
                raise ValueError(f"color of vertex {v} is negative")
            if self.num_colors is not None and c >= self.num_colors:
                raise ValueError(
                    f"color {c} of vertex {v} is not in 0..{self.num_colors - 1}"
                )
        return self

    @property
    def m(self) -> int:
        """Number of colors."""
        if self.num_colors is not None:
            return self.num_colors
        return max(self.colors.values(), default=-1) + 1

    def __cols_rows__(self) -> ColsRowsType:
        cols = ["Vertex", "Color"]
        rows = [[str(v), str(c)] for v, c in sorted(self.colors.items())]
        return cols, rows


def _fingerprint_coloring(g: LabeledGraph, keys: Mapping[int, Hashable]) -> Coloring:
    """Colors numbered by first appearance of each key, scanning vertices
    in ascending order."""
    ids: dict[Hashable, int] = {}
    colors = {v: ids.setdefault(keys[v], len(ids)) for v in g.vertices}
    return Coloring(colors=colors)


def uniform_coloring(g: LabeledGraph) -> Coloring:
    return Coloring(colors={v: 0 for v in g.vertices}, num_colors=1)


def atomic_type_coloring(g: LabeledGraph) -> Coloring:
    """Color by stored label set; vertex 0 gets color 0."""
    return _fingerprint_coloring(
        g, {v: tuple(sorted(g.stored_labels(v))) for v in g.vertices}
    )


def preset_coloring(g: LabeledGraph, preset: ColoringPreset) -> Coloring:
    if ColoringPreset(preset) == ColoringPreset.UNIFORM:
        return uniform_coloring(g)
    return atomic_type_coloring(g)


def refine_coloring(coloring: Coloring, split: Mapping[int, Hashable]) -> Coloring:
    """Split every color class by `split[v]`.

    Vertices keep sharing a color only if they shared it before and have
    equal split keys. Colors are renumbered by first appearance.
    """
    ids: dict[tuple[int, Hashable], int] = {}
    colors = {
        v: ids.setdefault((c, split.get(v)), len(ids))
        for v, c in sorted(coloring.colors.items())
    }
    return Coloring(colors=colors)


def parse_coloring(text: str) -> Coloring:
    try:
        return Coloring.model_validate_json(text)
    except ValidationError as e:
        raise ColoringError(f"Invalid coloring: {e}") from e


def load_coloring(path: Path) -> Coloring:
    logger.debug("Loading coloring from %s", path)
    try:
        return parse_coloring(read_file(path))
    except ColoringError as e:
        raise ColoringError(f"{path}: {e}") from e


def apply_coloring(g: LabeledGraph, coloring: Coloring) -> LabeledGraph:
    """Copy of `g` carrying the coloring.

    Colors show up as `color:<k>` labels wherever labels are read.

    Raises:
        ColoringError: The coloring names a vertex outside the graph or
            leaves a vertex uncolored.
    """
    outside = sorted(v for v in coloring.colors if v >= g.n)
    if outside:
        raise ColoringError(
            f"Coloring names vertices outside 0..{g.n - 1}: "
            f"{', '.join(map(str, outside))}"
        )
    missing = [v for v in g.vertices if v not in coloring.colors]
    if missing:
        raise ColoringError(
            f"Coloring leaves vertices uncolored: {', '.join(map(str, missing))}"
        )
    return g.with_colors(coloring.colors)


def default_radius(r: int) -> int:
    """DN radius used for an r-round game when none is given: l(r), at least 1."""
    return max(l_of(r), 1)


def difflocal_winner(
    g: LabeledGraph,
    u: int,
    v: int,
    r: int,
    mode: DifflocalMode = DifflocalMode.DIRECT,
    *,
    radius: Optional[int] = None,
) -> Winner:
    """Winner of the r-round differential game from (u, v), decided on the
    subgraph induced by DN_radius[u, v]. The radius defaults to
    `default_radius(r)`; any radius of at least r gives the same winner.

    Raises:
        UncoloredGraphError: `g` is not colored.
        UndefinedPairError: u and v have different colors.
    """
    radius = default_radius(r) if radius is None else radius
    dn = differential_neighborhood(g, u, v, radius, closed=True)
    h, mapping = induced_subgraph(g, dn)
    hu, hv = mapping[u], mapping[v]
    if DifflocalMode(mode) == DifflocalMode.DIRECT:
        return d_winner(h, (hu,), (hv,), r)
    xi = xi_formula(r, 1, h.label_alphabet())
    holds = evaluate(h, xi, {x_var(1): hu, y_var(1): hv})
    return Winner.DUPLICATOR if holds else Winner.SPOILER


class DNCensusRow(TableRenderable):
    u: int
    v: int
    color: int
    dn_size: int
    """|DN_r[u, v]|, closed."""
    local_winner: Winner
    full_winner: Winner
    agree: bool


class DNCensus(TableRenderable):
    """Per-pair differential neighbourhood sizes and the locality check."""

    r: int
    rounds: int
    n: int
    rows: list[DNCensusRow] = Field(default_factory=list)
    pairs: int = 0
    max_size: int = 0
    mean_size: float = 0.0
    disagreements: list[tuple[int, int]] = Field(default_factory=list)

    def __cols_rows__(self) -> ColsRowsType:
        cols = ["u", "v", "Color", "|DN|", "Local", "Full", "Agree"]
        rows = [
            [
                str(row.u),
                str(row.v),
                str(row.color),
                str(row.dn_size),
                row.local_winner,
                row.full_winner,
                Emoji.fmt_bool(row.agree),
            ]
            for row in self.rows
        ]
        rows.append(
            [
                "",
                "",
                f"{self.pairs} pairs",
                f"max {self.max_size}, mean {self.mean_size:.2f}",
                "",
                "",
                Emoji.fmt_bool(not self.disagreements),
            ]
        )
        return cols, rows


def dn_census(
    g: LabeledGraph, r: int, *, rounds: Optional[int] = None, threads: int = 1
) -> DNCensus:
    """For every same-colored pair u < v: |DN_r[u, v]| and whether the
    game decided inside it agrees with the game on the whole graph.

    The game has `rounds` rounds (default r). Pairs u = v are skipped.

    Raises:
        UncoloredGraphError: `g` is not colored.
    """
    if not g.is_colored:
        raise UncoloredGraphError("The census needs a color on every vertex")
    rounds = r if rounds is None else rounds
    colors = g.colors
    pairs = [
        (u, v)
        for u in g.vertices
        for v in range(u + 1, g.n)
        if colors[u] == colors[v]
    ]

    def census_row(pair: tuple[int, int]) -> DNCensusRow:
        u, v = pair
        size = len(differential_neighborhood(g, u, v, r, closed=True))
        local = difflocal_winner(g, u, v, rounds, radius=r)
        full = d_winner(g, (u,), (v,), rounds)
        return DNCensusRow(
            u=u,
            v=v,
            color=colors[u] or 0,
            dn_size=size,
            local_winner=local,
            full_winner=full,
            agree=local == full,
        )

    rows = parallel_map(census_row, pairs, threads)
    sizes = [row.dn_size for row in rows]
    census = DNCensus(
        r=r,
        rounds=rounds,
        n=g.n,
        rows=rows,
        pairs=len(rows),
        max_size=max(sizes, default=0),
        mean_size=statistics.fmean(sizes) if sizes else 0.0,
        disagreements=[(row.u, row.v) for row in rows if not row.agree],
    )
    if census.disagreements:
        logger.error(
            "Differential neighbourhood census disagrees on %s", census.disagreements
        )
    logger.debug("DN census: %d pairs, max size %d", census.pairs, census.max_size)
    return census
