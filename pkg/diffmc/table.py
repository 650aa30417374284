from __future__ import annotations

from typing import TYPE_CHECKING
from typing import Optional

from rich import box
from rich.table import Table
from rich.text import Text

from diffmc.output.style import TableStyle

if TYPE_CHECKING:
    from rich.console import RenderableType

    from diffmc.models import ColsType
    from diffmc.models import RowsType


def _is_number(cell: RenderableType) -> bool:
    text = cell.plain if isinstance(cell, Text) else cell
    return isinstance(text, str) and text.lstrip("-").replace(".", "", 1).isdigit()


def get_table(
    cols: ColsType,
    rows: RowsType,
    title: Optional[str] = None,
    *,
    show_lines: bool = True,
    box: box.Box = box.ROUNDED,
) -> Table:
    """Rich table of `rows` under the headers `cols`.

    Columns whose cells are all numbers (vertex ids, counts, sizes) are
    right-aligned.
    """
    table = Table(
        title=title, box=box, show_lines=show_lines, header_style=TableStyle.HEADER.value
    )
    for i, col in enumerate(cols):
        numeric = bool(rows) and all(_is_number(row[i]) for row in rows if i < len(row))
        table.add_column(col, overflow="fold", justify="right" if numeric else "left")
    for row in rows:
        # Empty subtables render as blank cells
        row = [cell if not isinstance(cell, Table) or cell.rows else "" for cell in row]
        table.add_row(*row)
    return table
