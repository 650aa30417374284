"""Move-by-move transcripts of single game runs.

A run is driven by two strategies. Each player either follows a scripted
list of moves, falling back to optimal play when the script runs out, or
plays optimally throughout. Optimal play is read from the solver's memo
table, so an optimal run always ends with the solver's winner.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from collections.abc import Sequence
from typing import Optional

from pydantic import BaseModel
from pydantic import Field

from diffmc.exceptions import IllegalMoveError
from diffmc.exceptions import InputError
from diffmc.games.iso import partial_iso
from diffmc.games.solver import GameKind
from diffmc.games.solver import GameSolver
from diffmc.games.solver import Player
from diffmc.games.solver import Side
from diffmc.games.solver import SpoilerMove
from diffmc.games.solver import Tuple
from diffmc.games.solver import Winner
from diffmc.games.solver import get_solver
from diffmc.graphs.graph import LabeledGraph
from diffmc.graphs.graph import mask_to_vertices
from diffmc.graphs.neighborhoods import sym_diff_mask
from diffmc.models import ColsRowsType
from diffmc.models import TableRenderable
from diffmc.output.style import render_winner

logger = logging.getLogger(__name__)


class ScriptedMove(BaseModel):
    """A Spoiler move in a script. `index` is ignored by EF games."""

    side: Side
    vertex: int
    index: Optional[int] = None


class GameScript(BaseModel):
    """Scripted strategies: `{"spoiler": [...], "duplicator": [3, 1]}`."""

    spoiler: list[ScriptedMove] = Field(default_factory=list)
    duplicator: list[int] = Field(default_factory=list)


class MoveRecord(TableRenderable):
    round: int
    player: Player
    side: Side
    index_i: Optional[int] = None
    vertex: int
    legal: bool = True
    dset: Optional[list[int]] = None
    """D(a_i, b_i) in force for the move (SD and D games)."""
    reason: Optional[str] = None
    """Why the move is illegal."""


class Transcript(TableRenderable):
    kind: GameKind
    rounds: int
    a: list[int]
    b: list[int]
    moves: list[MoveRecord] = Field(default_factory=list)
    winner: Optional[Winner] = None
    final_a: list[int] = Field(default_factory=list)
    final_b: list[int] = Field(default_factory=list)

    def __cols_rows__(self) -> ColsRowsType:
        cols = ["Round", "Player", "Side", "Index", "Vertex", "Legal", "D"]
        rows = [
            [
                str(m.round),
                m.player,
                m.side,
                "" if m.index_i is None else str(m.index_i),
                str(m.vertex),
                "yes" if m.legal else f"no: {m.reason}",
                "" if m.dset is None else " ".join(map(str, m.dset)),
            ]
            for m in self.moves
        ]
        if self.winner is not None:
            rows.append(["", render_winner(self.winner), "", "", "", "", ""])
        return cols, rows


def _spoiler_move(
    solver: GameSolver,
    a: Tuple,
    b: Tuple,
    scripted: ScriptedMove,
    rnd: int,
    transcript: Transcript,
) -> SpoilerMove:
    """Validate a scripted Spoiler move."""
    record = MoveRecord(
        round=rnd,
        player=Player.SPOILER,
        side=scripted.side,
        index_i=scripted.index,
        vertex=scripted.vertex,
    )
    reason: Optional[str] = None
    graph = solver.graph(scripted.side)
    dset = 0
    if not 0 <= scripted.vertex < graph.n:
        reason = "move is not a vertex"
    elif solver.kind != GameKind.EF:
        if scripted.index is None or not 0 <= scripted.index < len(a):
            reason = f"index {scripted.index} does not name a played pair"
        else:
            dset = sym_diff_mask(solver.g, a[scripted.index], b[scripted.index])
            record.dset = list(mask_to_vertices(dset))
            if not dset >> scripted.vertex & 1:
                reason = "move not in D(a_i,b_i)"
    if reason:
        record.legal = False
        record.reason = reason
        transcript.moves.append(record)
        raise IllegalMoveError(reason, transcript)
    transcript.moves.append(record)
    index = scripted.index if solver.kind != GameKind.EF else None
    return SpoilerMove(scripted.side, scripted.vertex, index, dset)


def _check_reply(
    solver: GameSolver, move: SpoilerMove, reply: int, rnd: int, transcript: Transcript
) -> None:
    side = move.side.other
    record = MoveRecord(
        round=rnd,
        player=Player.DUPLICATOR,
        side=side,
        index_i=move.index,
        vertex=reply,
        dset=list(mask_to_vertices(move.dset)) if move.index is not None else None,
    )
    reason: Optional[str] = None
    if not 0 <= reply < solver.graph(side).n:
        reason = "reply is not a vertex"
    elif solver.kind == GameKind.D and not move.dset >> reply & 1:
        reason = "reply not in D(a_i,b_i)"
    if reason:
        record.legal = False
        record.reason = reason
        transcript.moves.append(record)
        raise IllegalMoveError(reason, transcript)
    transcript.moves.append(record)


def game_trace(
    kind: GameKind,
    g: LabeledGraph,
    a: Sequence[int],
    b: Sequence[int],
    m: int,
    *,
    h: Optional[LabeledGraph] = None,
    script: Optional[GameScript] = None,
) -> Transcript:
    """Play one run of the m-round game and record every move.

    Raises:
        IllegalMoveError: A scripted move breaks the rules. The error carries
            the transcript up to and including the offending move.
    """
    kind = GameKind(kind)
    if kind != GameKind.EF and h is not None and h != g:
        raise InputError(f"{kind} games are played on a single graph")
    solver = get_solver(kind, g, None if h is None or h == g else h)
    solver.validate(a, b, m)
    script = script or GameScript()
    at, bt = tuple(a), tuple(b)
    transcript = Transcript(kind=kind, rounds=m, a=list(at), b=list(bt))

    for rnd in range(1, m + 1):
        if not partial_iso(solver.g, at, solver.h, bt):
            break
        remaining = m - rnd + 1
        if rnd <= len(script.spoiler):
            move = _spoiler_move(solver, at, bt, script.spoiler[rnd - 1], rnd, transcript)
        else:
            optimal = solver.winning_move(at, bt, remaining) or next(
                iter(solver.spoiler_moves(at, bt)), None
            )
            if optimal is None:
                break  # Spoiler is stuck
            move = optimal
            transcript.moves.append(
                MoveRecord(
                    round=rnd,
                    player=Player.SPOILER,
                    side=move.side,
                    index_i=move.index,
                    vertex=move.vertex,
                    dset=(
                        list(mask_to_vertices(move.dset))
                        if move.index is not None
                        else None
                    ),
                )
            )
        if rnd <= len(script.duplicator):
            reply = script.duplicator[rnd - 1]
        else:
            best = solver.winning_reply(at, bt, move, remaining)
            reply = best if best is not None else solver.replies(move)[0]
        _check_reply(solver, move, reply, rnd, transcript)
        if move.side == Side.A:
            at, bt = (*at, move.vertex), (*bt, reply)
        else:
            at, bt = (*at, reply), (*bt, move.vertex)

    transcript.final_a = list(at)
    transcript.final_b = list(bt)
    iso = partial_iso(solver.g, at, solver.h, bt)
    transcript.winner = Winner.DUPLICATOR if iso else Winner.SPOILER
    logger.debug("%s game trace ended with %s", kind, transcript.winner)
    return transcript


def enumerate_runs(
    g: LabeledGraph, a: Sequence[int], b: Sequence[int], r: int
) -> Iterator[tuple[Tuple, Tuple]]:
    """Final tuples of every legal run of the r-round differential game.

    A run ends early when the tuples stop being partially isomorphic (the
    game is over) or Spoiler has no move.
    """
    solver = get_solver(GameKind.D, g)
    solver.validate(a, b, r)

    def walk(at: Tuple, bt: Tuple, left: int) -> Iterator[tuple[Tuple, Tuple]]:
        if left == 0 or not partial_iso(g, at, g, bt):
            yield at, bt
            return
        moves = list(solver.spoiler_moves(at, bt))
        if not moves:
            yield at, bt
            return
        for move in moves:
            for reply in solver.replies(move):
                if move.side == Side.A:
                    nxt = (*at, move.vertex), (*bt, reply)
                else:
                    nxt = (*at, reply), (*bt, move.vertex)
                yield from walk(*nxt, left - 1)

    yield from walk(tuple(a), tuple(b), r)


def touched_vertices(
    g: LabeledGraph, a: Sequence[int], b: Sequence[int], r: int
) -> frozenset[int]:
    """Every vertex played in some legal run of the r-round differential game,
    the starting tuples included."""
    out: set[int] = set()
    for at, bt in enumerate_runs(g, a, b, r):
        out.update(at)
        out.update(bt)
    return frozenset(out)
