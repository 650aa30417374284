from __future__ import annotations

import itertools

import pytest

from diffmc.exceptions import InputError
from diffmc.games.solver import GameKind
from diffmc.games.solver import GameSolver
from diffmc.games.solver import Side
from diffmc.games.solver import Winner
from diffmc.games.solver import d_winner
from diffmc.games.solver import ef_winner
from diffmc.games.solver import get_solver
from diffmc.games.solver import l_of
from diffmc.games.solver import sd_winner
from diffmc.games.solver import winner
from diffmc.graphs.generators import all_graphs_up_to
from diffmc.graphs.generators import cycle
from diffmc.graphs.generators import edgeless
from diffmc.graphs.generators import half_graph
from diffmc.graphs.generators import half_graph_sides
from diffmc.graphs.generators import path
from diffmc.graphs.neighborhoods import distance


@pytest.mark.parametrize(
    "m, expect",
    [
        pytest.param(0, 0, id="l(0)"),
        pytest.param(1, 1, id="l(1)"),
        pytest.param(2, 3, id="l(2)"),
        pytest.param(3, 7, id="l(3)"),
    ],
)
def test_l_of(m: int, expect: int) -> None:
    assert l_of(m) == expect


def test_l_of_negative() -> None:
    with pytest.raises(InputError):
        l_of(-1)


def test_ef_empty_tuples_no_rounds() -> None:
    assert ef_winner(path(3), (), path(3), (), 0) == Winner.DUPLICATOR


def test_ef_edge_against_non_edge() -> None:
    # one pebble per side is always a partial isomorphism
    assert ef_winner(path(2), (), edgeless(2), (), 1) == Winner.DUPLICATOR
    assert ef_winner(path(2), (), edgeless(2), (), 2) == Winner.SPOILER


def test_ef_identical_tuples() -> None:
    g = cycle(5)
    for m in range(3):
        assert ef_winner(g, (0, 2), g, (0, 2), m) == Winner.DUPLICATOR


def test_ef_p3_classes() -> None:
    g = path(3)
    assert ef_winner(g, (0,), g, (2,), 2) == Winner.DUPLICATOR
    assert ef_winner(g, (0,), g, (1,), 0) == Winner.DUPLICATOR
    # Spoiler plays the other end, which the middle vertex cannot match
    assert ef_winner(g, (0,), g, (1,), 1) == Winner.SPOILER


def test_ef_not_isomorphic_start() -> None:
    assert ef_winner(path(3), (0, 1), path(3), (0, 2), 0) == Winner.SPOILER


@pytest.mark.parametrize("kind", [GameKind.SD, GameKind.D])
def test_same_vertex_is_a_duplicator_win(kind: GameKind) -> None:
    g = half_graph(3)
    for u in g.vertices:
        for m in range(3):
            assert winner(kind, g, (u,), (u,), m) == Winner.DUPLICATOR


@pytest.mark.parametrize("kind", [GameKind.SD, GameKind.D])
def test_p3_end_against_middle(kind: GameKind) -> None:
    assert winner(kind, path(3), (0,), (1,), 2) == Winner.SPOILER


def test_p4_spoiler_can_play_inside_the_difference() -> None:
    # D(0, 3) = {1, 2} on P4
    solver = GameSolver(GameKind.SD, path(4))
    moves = {(m.side, m.vertex, m.index) for m in solver.spoiler_moves((0,), (3,))}
    assert (Side.A, 2, 0) in moves
    assert {v for _, v, _ in moves} == {1, 2}


def test_spoiler_moves_are_deduplicated() -> None:
    # pairs (0, 2) and (2, 0) share D = {1}
    solver = GameSolver(GameKind.D, half_graph(3))
    moves = list(solver.spoiler_moves((0, 2), (2, 0)))
    assert [(m.side, m.vertex, m.index) for m in moves] == [
        (Side.A, 1, 0),
        (Side.B, 1, 0),
    ]


def test_differential_reply_stays_in_d() -> None:
    solver = GameSolver(GameKind.D, path(4))
    move = next(iter(solver.spoiler_moves((0,), (3,))))
    assert list(solver.replies(move)) == [1, 2]
    sd = GameSolver(GameKind.SD, path(4))
    assert list(sd.replies(move)) == [0, 1, 2, 3]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_half_graph_same_side_pairs(n: int) -> None:
    g = half_graph(n)
    for side in half_graph_sides(n):
        for u, v in itertools.combinations(side, 2):
            assert d_winner(g, (u,), (v,), 1) == Winner.SPOILER


def test_game_restriction_monotonicity() -> None:
    for g in all_graphs_up_to(4):
        for u, v in itertools.combinations(g.vertices, 2):
            for m in range(2):
                if ef_winner(g, (u,), g, (v,), m) == Winner.SPOILER:
                    assert sd_winner(g, (u,), (v,), l_of(m)) == Winner.SPOILER
            for m in range(3):
                if sd_winner(g, (u,), (v,), m) == Winner.SPOILER:
                    assert d_winner(g, (u,), (v,), m) == Winner.SPOILER


def test_distant_vertices_are_differential_equivalent() -> None:
    graphs = [*(path(n) for n in range(1, 9)), *(cycle(n) for n in range(3, 9))]
    for g in graphs:
        for m in (1, 2):
            for u, v in itertools.combinations(g.vertices, 2):
                if distance(g, u, v) <= 2 * m:
                    continue
                if ef_winner(g, (u,), g, (v,), m) == Winner.DUPLICATOR:
                    assert d_winner(g, (u,), (v,), m) == Winner.DUPLICATOR


def test_solver_memo_is_shared() -> None:
    g = half_graph(3)
    solver = get_solver(GameKind.D, g)
    assert get_solver(GameKind.D, g) is solver
    solver.winner((0,), (2,), 2)
    assert solver.memo
    assert solver.winner((0,), (2,), 2) == d_winner(g, (0,), (2,), 2)


@pytest.mark.parametrize(
    "kind, a, b, m",
    [
        pytest.param(GameKind.D, (), (), 1, id="empty differential tuples"),
        pytest.param(GameKind.SD, (0,), (0, 1), 1, id="length mismatch"),
        pytest.param(GameKind.D, (0,), (1,), -1, id="negative rounds"),
        pytest.param(GameKind.EF, (0,), (3,), 1, id="vertex outside graph"),
    ],
)
def test_invalid_positions(
    kind: GameKind, a: tuple[int, ...], b: tuple[int, ...], m: int
) -> None:
    with pytest.raises(InputError):
        winner(kind, path(3), a, b, m)


def test_differential_games_need_one_graph() -> None:
    with pytest.raises(InputError):
        winner(GameKind.D, path(3), (0,), (1,), 1, h=path(4))
