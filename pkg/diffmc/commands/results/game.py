from __future__ import annotations

from typing import TYPE_CHECKING

from diffmc.games.solver import GameKind
from diffmc.games.solver import Winner
from diffmc.models import TableRenderable
from diffmc.output.style import render_winner

if TYPE_CHECKING:
    from diffmc.models import ColsRowsType


class GameResult(TableRenderable):
    """Result type for `game` without `--trace`."""

    kind: GameKind
    rounds: int
    a: list[int]
    b: list[int]
    winner: Winner

    def __cols_rows__(self) -> ColsRowsType:
        cols = ["Game", "Rounds", "a", "b", "Winner"]
        rows = [
            [
                self.kind,
                str(self.rounds),
                " ".join(map(str, self.a)),
                " ".join(map(str, self.b)),
                render_winner(self.winner),
            ]
        ]
        return cols, rows
