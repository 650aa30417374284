"""Commands for playing Ehrenfeucht-Fraïssé style games."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer

from diffmc.app import Example
from diffmc.app import app
from diffmc.commands.common.args import ARG_GRAPH
from diffmc.exceptions import IllegalMoveError
from diffmc.exceptions import USAGE_EXIT_CODE
from diffmc.games.solver import GameKind
from diffmc.output.console import exit_err
from diffmc.output.render import render_result

HELP_PANEL = "Games"


@app.command(
    "game",
    rich_help_panel=HELP_PANEL,
    examples=[
        Example(
            "Who wins the 1-round differential game between two vertices",
            "diffmc game half3.graph.json d 1 0 1",
        ),
        Example(
            "Show an optimal run of the 2-round EF game between two graphs",
            "diffmc game p2.graph.json ef 2 '' '' --other k2bar.graph.json --trace",
        ),
        Example(
            "Replay scripted moves",
            "diffmc game g.graph.json sd 2 0 3 --script moves.json",
        ),
    ],
)
def game_cmd(
    ctx: typer.Context,
    graph: Path = ARG_GRAPH,
    kind: GameKind = typer.Argument(
        help="Game to play.", case_sensitive=False, show_default=False
    ),
    rounds: int = typer.Argument(help="Number of rounds.", min=0, show_default=False),
    a: str = typer.Argument(
        help="Starting tuple in G. Comma-separated vertices, '' for the empty tuple.",
        show_default=False,
    ),
    b: str = typer.Argument(
        help="Starting tuple in H. Comma-separated vertices, '' for the empty tuple.",
        show_default=False,
    ),
    other: Optional[Path] = typer.Option(
        None,
        "--other",
        help="Graph H for EF games. Defaults to G.",
        exists=True,
        dir_okay=False,
        show_default=False,
    ),
    trace: bool = typer.Option(
        False, "--trace", help="Print the moves of a run instead of just the winner."
    ),
    script: Optional[Path] = typer.Option(
        None,
        "--script",
        help="JSON file of scripted moves. Implies [option]--trace[/].",
        exists=True,
        dir_okay=False,
        show_default=False,
    ),
) -> None:
    """Decide the winner of a game on (G, a) and (H, b).

    Both players play optimally unless a script says otherwise. Scripted
    moves are checked against the rules of the game and the run stops at
    the first illegal one.
    """
    from diffmc.commands.results.game import GameResult
    from diffmc.games.solver import winner
    from diffmc.games.trace import GameScript
    from diffmc.games.trace import game_trace
    from diffmc.graphs.io import load_graph
    from diffmc.utils.args import parse_int_list_arg
    from diffmc.utils.fs import read_file

    g = load_graph(graph)
    h = load_graph(other) if other is not None else None
    at = parse_int_list_arg(a)
    bt = parse_int_list_arg(b)

    if not trace and script is None:
        result = winner(kind, g, at, bt, rounds, h=h)
        render_result(
            GameResult(kind=kind, rounds=rounds, a=at, b=bt, winner=result)
        )
        return

    moves = GameScript.model_validate_json(read_file(script)) if script else None
    try:
        transcript = game_trace(kind, g, at, bt, rounds, h=h, script=moves)
    except IllegalMoveError as e:
        if e.transcript is not None:
            render_result(e.transcript)
        exit_err(f"Illegal move: {e.reason}", code=USAGE_EXIT_CODE, exception=e)
    render_result(transcript)
