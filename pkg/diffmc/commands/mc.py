"""Model checking command."""

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
from diffmc.config.constants import Engine
from diffmc.config.constants import RepresentativeMode
from diffmc.difflocal import ColoringPreset
from diffmc.output.render import render_result

HELP_PANEL = "Model Checking"


@app.command(
    "mc",
    rich_help_panel=HELP_PANEL,
    examples=[
        Example(
            "Check a sentence stored in a file",
            "diffmc mc p3.graph.json isolated.fo",
        ),
        Example(
            "Check formula text with the brute force engine",
            "diffmc mc p3.graph.json 'exists x. forall y. !E(x,y)' --text --engine brute",
        ),
        Example(
            "Use the local engine on an atomic-type colored graph",
            "diffmc mc g.graph.json phi.fo --engine difflocal --preset atomic_type",
        ),
    ],
)
def model_check_cmd(
    ctx: typer.Context,
    graph: Path = ARG_GRAPH,
    formula: str = typer.Argument(
        help="Formula file, or formula text with [option]--text[/].",
        show_default=False,
    ),
    text: bool = typer.Option(
        False, "--text", "-t", help="Treat FORMULA as formula text."
    ),
    engine: Optional[Engine] = typer.Option(
        None,
        "--engine",
        "-e",
        help="Model checking engine. Defaults to [configopt]engine.default_engine[/].",
        case_sensitive=False,
        show_default=False,
    ),
    mode: Optional[RepresentativeMode] = typer.Option(
        None,
        "--mode",
        help="How representatives are picked. Defaults to [configopt]engine.representative_mode[/].",
        case_sensitive=False,
        show_default=False,
    ),
    coloring: Optional[Path] = OPTION_COLORING,
    preset: Optional[ColoringPreset] = OPTION_PRESET,
    threads: Optional[int] = OPTION_THREADS,
) -> None:
    """Decide whether a graph satisfies a first-order sentence.

    Prints the verdict together with the size of the evaluation tree the
    engine built and how many relation graphs it needed.
    """
    from diffmc.commands.common.graph import load_input_graph
    from diffmc.engine.mc import model_check
    from diffmc.logic.formula import labels_used
    from diffmc.logic.parser import parse_formula
    from diffmc.logic.parser import read_formula
    from diffmc.output.console import warning

    config = app.state.config
    g = load_input_graph(graph, coloring, preset)
    phi = parse_formula(formula) if text else read_formula(Path(formula))
    absent = labels_used(phi) - g.label_alphabet()
    if absent:
        warning(
            f"No vertex carries label(s) {', '.join(sorted(absent))}; "
            "their atoms are false everywhere"
        )
    result = model_check(
        g,
        phi,
        engine or config.engine.default_engine,
        mode=mode or config.engine.representative_mode,
        threads=threads or app.threads,
        max_positions=config.engine.max_full_tree_positions,
    )
    render_result(result)
