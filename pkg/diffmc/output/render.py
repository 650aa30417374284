from __future__ import annotations

from typing import TYPE_CHECKING

from diffmc.config.constants import OutputFormat
from diffmc.output.console import console
from diffmc.state import get_state

if TYPE_CHECKING:
    from diffmc.models import TableRenderable


def render_result(result: TableRenderable) -> None:
    """Print a command result to stdout in the configured output format.

    Every command result is a `TableRenderable`, so the same model can be
    shown as a table or written as a JSON document.
    """
    fmt = get_state().config.app.output.format
    if fmt == OutputFormat.JSON:
        render_json(result)
    elif fmt == OutputFormat.TABLE:
        render_table(result)
    else:
        raise ValueError(f"Unknown output format {fmt!r}.")


def render_table(result: TableRenderable) -> None:
    tbl = result.as_table()
    if tbl.rows:
        console.print(tbl)
    elif not result.empty_ok:
        console.print("Nothing to show.")


def render_json(result: TableRenderable) -> None:
    """Print the model as-is, without an envelope, so documents written by
    one command can be read back by another."""
    doc = result.model_dump_json(indent=2, by_alias=True)
    # print_json re-highlights; plain print keeps the bytes stable for pipes
    console.print(doc, markup=False, highlight=False, soft_wrap=True)
