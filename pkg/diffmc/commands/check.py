"""Property check suites."""

from __future__ import annotations

from typing import Optional

import typer

from diffmc.app import Example
from diffmc.app import app
from diffmc.commands.common.args import OPTION_THREADS
from diffmc.output.render import render_result

HELP_PANEL = "Checks"

COUNTEREXAMPLE_EXIT_CODE = 1


@app.command(
    "check",
    rich_help_panel=HELP_PANEL,
    examples=[
        Example("Run a suite with its default bounds", "diffmc check restriction"),
        Example(
            "Engine agreement on small graphs only",
            "diffmc check oracle_equiv --max-n 4 --random-graphs 0",
        ),
    ],
)
def check_cmd(
    ctx: typer.Context,
    suite: str = typer.Argument(help="Name of the suite to run.", show_default=False),
    max_n: Optional[int] = typer.Option(
        None, "--max-n", help="Largest vertex count.", min=1, show_default=False
    ),
    max_m: Optional[int] = typer.Option(
        None,
        "--max-m",
        help="Largest number of rounds, quantifier rank or radius.",
        min=0,
        show_default=False,
    ),
    max_k: int = typer.Option(
        2, "--max-k", help="Longest pinned tuple for [value]pin_rewrite[/].", min=1
    ),
    seed: Optional[int] = typer.Option(
        None,
        "--seed",
        help="Seed for random graphs. Defaults to [configopt]checks.seed[/].",
        show_default=False,
    ),
    random_graphs: Optional[int] = typer.Option(
        None,
        "--random-graphs",
        help="Random graphs drawn by suites that use them. Defaults to [configopt]checks.random_graphs[/].",
        min=0,
        show_default=False,
    ),
    threads: Optional[int] = OPTION_THREADS,
) -> None:
    """Run a property suite over exhaustive and seeded random graphs.

    Exits with code 1 if the suite finds a counterexample.
    """
    from diffmc.checks import CheckBounds
    from diffmc.checks import run_suite
    from diffmc.output.console import error

    bounds = CheckBounds.from_config(
        app.state.config.checks,
        max_n=max_n,
        max_m=max_m,
        max_k=max_k,
        seed=seed,
        random_graphs=random_graphs,
        threads=threads or app.threads,
    )
    result = run_suite(suite, bounds)
    render_result(result)
    if not result.passed:
        error(
            f"Suite {result.suite} found {len(result.counterexamples)} counterexample(s)"
        )
        raise typer.Exit(COUNTEREXAMPLE_EXIT_CODE)
