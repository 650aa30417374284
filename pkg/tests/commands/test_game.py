from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import pytest
from typer.testing import CliRunner

from diffmc.app import StatefulApp
from diffmc.exceptions import USAGE_EXIT_CODE
from diffmc.graphs.generators import edgeless
from diffmc.graphs.generators import half_graph
from diffmc.graphs.generators import path
from diffmc.state import State


@pytest.mark.parametrize(
    "args, expect",
    [
        pytest.param(["d", "1", "0", "2"], "Spoiler", id="vertices split by 1"),
        pytest.param(["d", "1", "0", "0"], "Duplicator", id="same vertex"),
        pytest.param(["sd", "3", "1", "1"], "Duplicator", id="same vertex sd"),
        pytest.param(["ef", "1", "0", "2"], "Duplicator", id="ef one round"),
    ],
)
def test_game_winner(
    app: StatefulApp,
    runner: CliRunner,
    state: State,
    graph_file: Any,
    args: list[str],
    expect: str,
) -> None:
    g = graph_file(half_graph(3))
    result = runner.invoke(app, ["game", str(g), *args])
    assert result.exit_code == 0, result.output
    doc = json.loads(result.stdout)
    assert doc["winner"] == expect
    assert doc["kind"] == args[0]


@pytest.mark.parametrize("rounds, expect", [("1", "Duplicator"), ("2", "Spoiler")])
def test_game_ef_between_graphs(
    app: StatefulApp,
    runner: CliRunner,
    state: State,
    graph_file: Any,
    rounds: str,
    expect: str,
) -> None:
    g = graph_file(path(2), "p2")
    h = graph_file(edgeless(2), "k2bar")
    result = runner.invoke(
        app, ["game", str(g), "ef", rounds, "", "", "--other", str(h)]
    )
    assert result.exit_code == 0, result.output
    doc = json.loads(result.stdout)
    assert doc["winner"] == expect
    assert doc["a"] == doc["b"] == []


def test_game_trace(
    app: StatefulApp, runner: CliRunner, state: State, graph_file: Any
) -> None:
    g = graph_file(half_graph(3))
    result = runner.invoke(app, ["game", str(g), "d", "1", "0", "2", "--trace"])
    assert result.exit_code == 0, result.output
    doc = json.loads(result.stdout)
    assert doc["winner"] == "Spoiler"
    assert doc["moves"][0]["dset"] == [1]


def test_game_illegal_script(
    app: StatefulApp,
    runner: CliRunner,
    state: State,
    graph_file: Any,
    data_dir: Path,
) -> None:
    g = graph_file(half_graph(3))
    script = data_dir / "half3-script.json"
    result = runner.invoke(
        app, ["game", str(g), "d", "1", "0", "2", "--script", str(script)]
    )
    assert result.exit_code == USAGE_EXIT_CODE
    # the transcript up to the illegal move is still printed
    assert '"legal": false' in result.stdout


@pytest.mark.parametrize(
    "args",
    [
        pytest.param(["d", "1", "0", "7"], id="vertex outside graph"),
        pytest.param(["d", "1", "0,1", "2"], id="length mismatch"),
        pytest.param(["d", "1", "0", "x"], id="not an integer"),
    ],
)
def test_game_invalid_tuples(
    app: StatefulApp,
    runner: CliRunner,
    state: State,
    graph_file: Any,
    args: list[str],
) -> None:
    g = graph_file(half_graph(3))
    result = runner.invoke(app, ["game", str(g), *args])
    assert result.exit_code == USAGE_EXIT_CODE


def test_game_other_graph_only_for_ef(
    app: StatefulApp, runner: CliRunner, state: State, graph_file: Any
) -> None:
    g = graph_file(path(3), "p3")
    h = graph_file(path(4), "p4")
    result = runner.invoke(
        app, ["game", str(g), "d", "1", "0", "1", "--other", str(h)]
    )
    assert result.exit_code == USAGE_EXIT_CODE
