from __future__ import annotations

from pathlib import Path
from typing import Any
from typing import Optional

import typer

from diffmc.difflocal import ColoringPreset


def get_threads_option(default: Optional[int] = None) -> Any:
    """Threads option factory. Unset means the configured default."""
    return typer.Option(
        default,
        "--threads",
        "-j",
        help="Worker threads for pairwise computations. Defaults to [configopt]engine.threads[/].",
        min=1,
        show_default=False,
    )


OPTION_THREADS = get_threads_option()

ARG_GRAPH = typer.Argument(
    help="Graph file in canonical graph JSON.",
    exists=True,
    dir_okay=False,
    readable=True,
    show_default=False,
)

OPTION_COLORING: Optional[Path] = typer.Option(
    None,
    "--coloring",
    help="Coloring file to apply to the graph.",
    exists=True,
    dir_okay=False,
    readable=True,
    show_default=False,
    rich_help_panel="Coloring",
)

OPTION_PRESET: Optional[ColoringPreset] = typer.Option(
    None,
    "--preset",
    help="Color the graph with a preset instead of a coloring file.",
    case_sensitive=False,
    show_default=False,
    rich_help_panel="Coloring",
)
