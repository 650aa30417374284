"""Graph generator command."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer

from diffmc.app import Example
from diffmc.app import app
from diffmc.graphs.generators import GraphFamily
from diffmc.output.render import render_result

HELP_PANEL = "Graphs"


@app.command(
    "gen",
    rich_help_panel=HELP_PANEL,
    examples=[
        Example("The path on 4 vertices", "diffmc gen path 4"),
        Example(
            "A seeded random graph written to a file",
            "diffmc gen erdos_renyi 8 --seed 1 --p 0.3 --output g.graph.json",
        ),
        Example("The complement of a half-graph", "diffmc gen complement_of half_graph 3"),
        Example("Every graph on up to 3 vertices", "diffmc gen all_graphs_up_to 3"),
    ],
)
def gen_cmd(
    ctx: typer.Context,
    family: GraphFamily = typer.Argument(
        help="Graph family.", case_sensitive=False, show_default=False
    ),
    params: list[str] = typer.Argument(
        help="Family parameters. [value]complement_of[/] takes a family and its parameters.",
        show_default=False,
    ),
    seed: Optional[int] = typer.Option(
        None, "--seed", help="Seed for [value]erdos_renyi[/].", show_default=False
    ),
    p: float = typer.Option(
        0.5, "--p", help="Edge probability for [value]erdos_renyi[/].", min=0.0, max=1.0
    ),
    output: Optional[Path] = typer.Option(
        None,
        "--output",
        "-O",
        help="Write the graph to this file instead of stdout.",
        dir_okay=False,
        show_default=False,
    ),
) -> None:
    """Generate a graph of a named family in canonical graph JSON."""
    from diffmc.graphs.generators import stream
    from diffmc.graphs.io import GraphDocument
    from diffmc.graphs.io import GraphList
    from diffmc.graphs.io import dump_graph
    from diffmc.output.console import success
    from diffmc.utils.fs import write_file

    graphs = list(stream(family, *params, seed=seed, edge_probability=p))
    if GraphFamily.ALL_GRAPHS_UP_TO in (family, *params[:1]):
        batch = GraphList(graphs=[GraphDocument.from_graph(g) for g in graphs])
        if output is not None:
            write_file(output, batch.model_dump_json(indent=2) + "\n")
            success(f"Wrote {len(batch.graphs)} graphs to {output}")
        else:
            render_result(batch)
        return

    (g,) = graphs
    if output is not None:
        dump_graph(g, output)
        success(f"Wrote {family} graph to {output}")
    else:
        render_result(GraphDocument.from_graph(g))
