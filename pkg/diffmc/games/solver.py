"""Winners of Ehrenfeucht-Fraïssé, semi-differential and differential games.

All three games are solved by the same memoised alternating search. A
position is a pair of equal-length vertex tuples and the number of rounds
left. The search checks, in order:

1. the map ā ↦ b̄ is not a partial isomorphism: Spoiler has won;
2. no rounds are left: Duplicator has won;
3. Spoiler has no legal move: Duplicator has won;
4. otherwise Spoiler wins iff some move leaves Duplicator without a
   winning reply.

Spoiler moves are tried by index ascending, side `a` before `b`, vertex
ascending; Duplicator replies by vertex ascending.
"""

from __future__ import annotations

import functools
import logging
from collections.abc import Iterator
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

from strenum import StrEnum

from diffmc.exceptions import InputError
from diffmc.games.iso import extends_iso
from diffmc.games.iso import partial_iso
from diffmc.graphs.graph import LabeledGraph
from diffmc.graphs.graph import mask_to_vertices
from diffmc.graphs.neighborhoods import sym_diff_mask

logger = logging.getLogger(__name__)

Tuple = tuple[int, ...]


class GameKind(StrEnum):
    EF = "ef"
    """Ehrenfeucht-Fraïssé game: Spoiler and Duplicator move anywhere."""

    SD = "sd"
    """Semi-differential: Spoiler moves inside some D(a_i, b_i)."""

    D = "d"
    """Differential: Duplicator must answer inside the same D(a_i, b_i)."""


class Player(StrEnum):
    SPOILER = "Spoiler"
    DUPLICATOR = "Duplicator"


Winner = Player


class Side(StrEnum):
    A = "a"
    B = "b"

    @property
    def other(self) -> Side:
        return Side.B if self == Side.A else Side.A


@dataclass(frozen=True)
class GamePosition:
    """Spoiler to move with `rounds` rounds left."""

    kind: GameKind
    a: Tuple
    b: Tuple
    rounds: int

    def __post_init__(self) -> None:
        if len(self.a) != len(self.b):
            raise InputError(f"Tuples differ in length: {self.a} and {self.b}")
        if self.rounds < 0:
            raise InputError(f"Rounds must be nonnegative, got {self.rounds}")


@dataclass(frozen=True)
class SpoilerMove:
    side: Side
    vertex: int
    index: Optional[int] = None
    """Pair the move is played in (SD and D games)."""
    dset: int = 0
    """Bitmask of D(a_i, b_i) for the chosen pair."""


def l_of(m: int) -> int:
    """Rounds of the (semi-)differential game matching m EF rounds.

    l(0) = 0 and l(i + 1) = 2 l(i) + 1, i.e. 2**m - 1.
    """
    if m < 0:
        raise InputError(f"Rounds must be nonnegative, got {m}")
    rounds = 0
    for _ in range(m):
        rounds = 2 * rounds + 1
    return rounds


class GameSolver:
    """Memoised solver for one game kind on fixed graphs.

    EF games are played between (G, ā) and (H, b̄); SD and D games on a
    single graph. The memo table maps (ā, b̄, rounds) to whether Duplicator
    wins and is shared by every query on this solver. Entries are written
    once with a deterministic value, so concurrent queries are safe.
    """

    def __init__(
        self, kind: GameKind, g: LabeledGraph, h: Optional[LabeledGraph] = None
    ) -> None:
        self.kind = GameKind(kind)
        if self.kind != GameKind.EF and h is not None and h != g:
            raise InputError(f"{self.kind} games are played on a single graph")
        self.g = g
        self.h = g if h is None else h
        self.memo: dict[tuple[Tuple, Tuple, int], bool] = {}

    def graph(self, side: Side) -> LabeledGraph:
        return self.g if side == Side.A else self.h

    def validate(self, a: Sequence[int], b: Sequence[int], rounds: int) -> None:
        GamePosition(self.kind, tuple(a), tuple(b), rounds)
        self.g.check_vertices(a)
        self.h.check_vertices(b)
        if self.kind != GameKind.EF and not a:
            raise InputError(f"{self.kind} games need nonempty starting tuples")

    def spoiler_moves(self, a: Tuple, b: Tuple) -> Iterator[SpoilerMove]:
        """Legal Spoiler moves, without moves that offer the same replies."""
        if self.kind == GameKind.EF:
            for side in Side:
                for v in self.graph(side).vertices:
                    yield SpoilerMove(side, v)
            return
        seen: set[tuple[int, Side, int]] = set()
        for i, (x, y) in enumerate(zip(a, b)):
            dset = sym_diff_mask(self.g, x, y)
            for side in Side:
                for v in mask_to_vertices(dset):
                    # SD replies do not depend on the pair, D replies do
                    key = (dset if self.kind == GameKind.D else 0, side, v)
                    if key in seen:
                        continue
                    seen.add(key)
                    yield SpoilerMove(side, v, i, dset)

    def replies(self, move: SpoilerMove) -> Sequence[int]:
        """Legal Duplicator answers to a Spoiler move."""
        if self.kind == GameKind.D:
            return mask_to_vertices(move.dset)
        return self.graph(move.side.other).vertices

    def play(
        self, a: Tuple, b: Tuple, move: SpoilerMove, reply: int
    ) -> Optional[tuple[Tuple, Tuple]]:
        """Tuples after a move and its reply; None if the map stops being
        a partial isomorphism."""
        if move.side == Side.A:
            x, y = move.vertex, reply
        else:
            x, y = reply, move.vertex
        if not extends_iso(self.g, a, x, self.h, b, y):
            return None
        return (*a, x), (*b, y)

    def duplicator_wins(self, a: Tuple, b: Tuple, rounds: int) -> bool:
        """Duplicator wins from (ā, b̄), which must be partially isomorphic."""
        if rounds == 0:
            return True
        key = (a, b, rounds)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        result = all(
            self.has_winning_reply(a, b, move, rounds)
            for move in self.spoiler_moves(a, b)
        )
        self.memo[key] = result
        return result

    def has_winning_reply(
        self, a: Tuple, b: Tuple, move: SpoilerMove, rounds: int
    ) -> bool:
        return self.winning_reply(a, b, move, rounds) is not None

    def winning_reply(
        self, a: Tuple, b: Tuple, move: SpoilerMove, rounds: int
    ) -> Optional[int]:
        """Smallest reply after which Duplicator still wins, if any."""
        for reply in self.replies(move):
            nxt = self.play(a, b, move, reply)
            if nxt is not None and self.duplicator_wins(*nxt, rounds - 1):
                return reply
        return None

    def winning_move(self, a: Tuple, b: Tuple, rounds: int) -> Optional[SpoilerMove]:
        """First Spoiler move without a winning Duplicator reply, if any."""
        if rounds == 0:
            return None
        for move in self.spoiler_moves(a, b):
            if not self.has_winning_reply(a, b, move, rounds):
                return move
        return None

    def winner(self, a: Sequence[int], b: Sequence[int], rounds: int) -> Winner:
        """Winner of the `rounds`-round game from (ā, b̄) under optimal play."""
        self.validate(a, b, rounds)
        at, bt = tuple(a), tuple(b)
        if not partial_iso(self.g, at, self.h, bt):
            return Winner.SPOILER
        if self.duplicator_wins(at, bt, rounds):
            return Winner.DUPLICATOR
        return Winner.SPOILER


@functools.lru_cache(maxsize=512)
def get_solver(
    kind: GameKind, g: LabeledGraph, h: Optional[LabeledGraph] = None
) -> GameSolver:
    """Solver shared by every query of `kind` on (G, H)."""
    return GameSolver(kind, g, h)


def ef_winner(
    g: LabeledGraph, a: Sequence[int], h: LabeledGraph, b: Sequence[int], m: int
) -> Winner:
    """Winner of the m-round Ehrenfeucht-Fraïssé game on ((G, ā), (H, b̄))."""
    return get_solver(GameKind.EF, g, None if h == g else h).winner(a, b, m)


def sd_winner(g: LabeledGraph, a: Sequence[int], b: Sequence[int], m: int) -> Winner:
    """Winner of the m-round semi-differential game on G from (ā, b̄)."""
    return get_solver(GameKind.SD, g).winner(a, b, m)


def d_winner(g: LabeledGraph, a: Sequence[int], b: Sequence[int], m: int) -> Winner:
    """Winner of the m-round differential game on G from (ā, b̄)."""
    return get_solver(GameKind.D, g).winner(a, b, m)


def winner(
    kind: GameKind,
    g: LabeledGraph,
    a: Sequence[int],
    b: Sequence[int],
    m: int,
    h: Optional[LabeledGraph] = None,
) -> Winner:
    """Dispatch on the game kind. `h` is only used by EF games."""
    kind = GameKind(kind)
    if kind == GameKind.EF:
        return ef_winner(g, a, g if h is None else h, b, m)
    if h is not None and h != g:
        raise InputError(f"{kind} games are played on a single graph")
    if kind == GameKind.SD:
        return sd_winner(g, a, b, m)
    return d_winner(g, a, b, m)
