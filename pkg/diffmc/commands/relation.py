"""Commands for game relations and differential neighbourhoods."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer

from diffmc.app import Example
from diffmc.app import app
from diffmc.commands.common.args import ARG_GRAPH
from diffmc.commands.common.args import OPTION_COLORING
from diffmc.commands.common.args import OPTION_PRESET
from diffmc.commands.common.args import OPTION_THREADS
from diffmc.difflocal import ColoringPreset
from diffmc.output.render import render_result
from diffmc.relations import RelationKind

HELP_PANEL = "Relations"


@app.command(
    "relation",
    rich_help_panel=HELP_PANEL,
    examples=[
        Example(
            "Pairs related by the 1-round differential game",
            "diffmc relation half2.graph.json --kind d --rounds 1",
        ),
        Example(
            "Components and an independent set of the relation",
            "diffmc relation g.graph.json --kind d_game --rounds 3 --summary",
        ),
    ],
)
def relation_cmd(
    ctx: typer.Context,
    graph: Path = ARG_GRAPH,
    kind: str = typer.Option(
        RelationKind.D_GAME.value,
        "--kind",
        "-k",
        help=(
            "Relation to compute between single vertices: "
            f"{', '.join(k.value for k in RelationKind)}. "
            "The game kinds also accept [value]d[/], [value]sd[/] and [value]ef[/]."
        ),
        metavar="KIND",
    ),
    rounds: int = typer.Option(
        1,
        "--rounds",
        "-r",
        help="Rounds of the game, or quantifier rank for [value]fo_type[/].",
        min=0,
    ),
    summary: bool = typer.Option(
        False,
        "--summary",
        help="Print components and a greedy independent set instead of the pairs.",
    ),
    coloring: Optional[Path] = OPTION_COLORING,
    preset: Optional[ColoringPreset] = OPTION_PRESET,
    threads: Optional[int] = OPTION_THREADS,
) -> None:
    """Compute which pairs of vertices a game or type relation relates.

    Only pairs u < v are listed. The [value]difflocal[/] kind needs a
    colored graph.
    """
    from diffmc.commands.common.graph import load_input_graph
    from diffmc.relations import relation_graph
    from diffmc.relations import relation_summary

    g = load_input_graph(graph, coloring, preset)
    relation = relation_graph(g, kind, rounds, threads=threads or app.threads)
    if summary:
        render_result(relation_summary(relation))
    else:
        render_result(relation)


@app.command(
    "dn",
    rich_help_panel=HELP_PANEL,
    examples=[
        Example(
            "Census of DN_1 over a graph with a single color",
            "diffmc dn g.graph.json --r 1 --preset uniform",
        ),
        Example(
            "Use a coloring file and play 2-round games inside DN_1",
            "diffmc dn g.graph.json --r 1 --rounds 2 --coloring g.coloring.json",
        ),
    ],
)
def dn_cmd(
    ctx: typer.Context,
    graph: Path = ARG_GRAPH,
    r: int = typer.Option(
        1, "--r", "-r", help="Radius of the differential neighbourhoods.", min=0
    ),
    rounds: Optional[int] = typer.Option(
        None,
        "--rounds",
        help="Rounds of the games compared inside and outside DN_r. Defaults to the radius.",
        min=0,
        show_default=False,
    ),
    coloring: Optional[Path] = OPTION_COLORING,
    preset: Optional[ColoringPreset] = OPTION_PRESET,
    threads: Optional[int] = OPTION_THREADS,
) -> None:
    """Sizes of the differential neighbourhoods of all same-colored pairs.

    For every pair the differential game decided inside DN_r is compared
    with the game on the whole graph.
    """
    from diffmc.commands.common.graph import load_input_graph
    from diffmc.difflocal import dn_census

    g = load_input_graph(graph, coloring, preset)
    census = dn_census(g, r, rounds=rounds, threads=threads or app.threads)
    render_result(census)
