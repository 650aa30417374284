from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import pytest
from inline_snapshot import snapshot
from typer.testing import CliRunner

from diffmc.app import StatefulApp
from diffmc.exceptions import USAGE_EXIT_CODE
from diffmc.graphs.generators import half_graph
from diffmc.graphs.generators import path
from diffmc.state import State


def test_relation_ef_pairs(
    app: StatefulApp, runner: CliRunner, state: State, data_dir: Path
) -> None:
    result = runner.invoke(
        app,
        ["relation", str(data_dir / "p3.graph.json"), "--kind", "ef_game"],
    )
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout) == snapshot(
        {"n": 3, "kind": "ef_game", "rounds": 1, "pairs": [[0, 2]]}
    )


def test_relation_d_game_half_graph(
    app: StatefulApp, runner: CliRunner, state: State, graph_file: Any
) -> None:
    g = graph_file(half_graph(2))
    result = runner.invoke(app, ["relation", str(g), "--kind", "d_game"])
    assert result.exit_code == 0, result.output
    doc = json.loads(result.stdout)
    assert doc["kind"] == "d_game"
    assert doc["n"] == 4
    # vertices on the same side are told apart by the other side
    assert [0, 2] not in doc["pairs"]
    assert [1, 3] not in doc["pairs"]


@pytest.mark.parametrize(
    "short, kind",
    [("d", "d_game"), ("sd", "sd_game"), ("ef", "ef_game"), ("D", "d_game")],
)
def test_relation_short_kind(
    app: StatefulApp,
    runner: CliRunner,
    state: State,
    graph_file: Any,
    short: str,
    kind: str,
) -> None:
    g = str(graph_file(half_graph(2)))
    result = runner.invoke(app, ["relation", g, "--kind", short, "--rounds", "1"])
    assert result.exit_code == 0, result.output
    doc = json.loads(result.stdout)
    assert doc["kind"] == kind
    assert doc["rounds"] == 1

    full = runner.invoke(app, ["relation", g, "--kind", kind, "--rounds", "1"])
    assert json.loads(full.stdout)["pairs"] == doc["pairs"]
    if kind == "d_game":
        assert [0, 2] not in doc["pairs"]
        assert [1, 3] not in doc["pairs"]


def test_relation_summary(
    app: StatefulApp, runner: CliRunner, state: State, data_dir: Path
) -> None:
    result = runner.invoke(
        app,
        [
            "relation",
            str(data_dir / "p3.graph.json"),
            "--kind",
            "ef_game",
            "--summary",
        ],
    )
    assert result.exit_code == 0, result.output
    doc = json.loads(result.stdout)
    assert doc["components"] == [[0, 2], [1]]
    assert doc["independent_set"] == [0, 1]
    assert doc["independent_set_size"] == 2


def test_relation_difflocal_needs_colors(
    app: StatefulApp, runner: CliRunner, state: State, data_dir: Path
) -> None:
    g = str(data_dir / "p3.graph.json")
    result = runner.invoke(app, ["relation", g, "--kind", "difflocal"])
    assert result.exit_code == USAGE_EXIT_CODE

    coloring = str(data_dir / "p3.coloring.json")
    result = runner.invoke(
        app, ["relation", g, "--kind", "difflocal", "--coloring", coloring]
    )
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["kind"] == "difflocal"


def test_relation_unknown_kind(
    app: StatefulApp, runner: CliRunner, state: State, data_dir: Path
) -> None:
    result = runner.invoke(
        app, ["relation", str(data_dir / "p3.graph.json"), "--kind", "nope"]
    )
    assert result.exit_code == USAGE_EXIT_CODE


def test_dn_census(
    app: StatefulApp, runner: CliRunner, state: State, graph_file: Any
) -> None:
    g = graph_file(path(4))
    result = runner.invoke(app, ["dn", str(g), "--r", "1", "--preset", "uniform"])
    assert result.exit_code == 0, result.output
    doc = json.loads(result.stdout)
    assert doc["n"] == 4
    assert doc["pairs"] == 6
    assert doc["rounds"] == 1
    assert doc["disagreements"] == []


def test_dn_rounds_option(
    app: StatefulApp, runner: CliRunner, state: State, graph_file: Any
) -> None:
    g = graph_file(path(4))
    result = runner.invoke(
        app, ["dn", str(g), "--r", "1", "--rounds", "2", "--preset", "uniform"]
    )
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["rounds"] == 2


def test_dn_uncolored_graph(
    app: StatefulApp, runner: CliRunner, state: State, data_dir: Path
) -> None:
    result = runner.invoke(app, ["dn", str(data_dir / "p3.graph.json")])
    assert result.exit_code == USAGE_EXIT_CODE
