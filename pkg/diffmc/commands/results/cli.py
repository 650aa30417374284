from __future__ import annotations

from collections.abc import Mapping
from pathlib import Path
from typing import TYPE_CHECKING

from pydantic import BaseModel
from typing_extensions import Self

from diffmc.models import TableRenderable
from diffmc.output.style import Emoji

if TYPE_CHECKING:
    from diffmc.models import ColsRowsType
    from diffmc.models import RowsType


class DirectoryEntry(BaseModel):
    name: str
    path: Path
    exists: bool


class DirectoriesResult(TableRenderable):
    """Result type for `show_dirs`."""

    directories: list[DirectoryEntry] = []

    @classmethod
    def from_paths(cls, paths: Mapping[str, Path]) -> Self:
        return cls(
            directories=[
                DirectoryEntry(name=name, path=p, exists=p.exists())
                for name, p in paths.items()
            ]
        )

    def __cols_rows__(self) -> ColsRowsType:
        cols = ["Type", "Path", "Exists"]
        rows: RowsType = [
            [d.name, str(d.path), Emoji.fmt_bool(d.exists)] for d in self.directories
        ]
        return cols, rows
