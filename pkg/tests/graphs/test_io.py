from __future__ import annotations

import json
from pathlib import Path

import pytest
from inline_snapshot import snapshot

from diffmc.exceptions import DiffMCFileNotFoundError
from diffmc.exceptions import GraphFormatError
from diffmc.graphs.generators import path
from diffmc.graphs.graph import LabeledGraph
from diffmc.graphs.io import GraphDocument
from diffmc.graphs.io import dump_graph
from diffmc.graphs.io import graph_to_json
from diffmc.graphs.io import load_graph
from diffmc.graphs.io import parse_graph


def test_graph_to_json_canonical() -> None:
    g = LabeledGraph(3, [(2, 1), (0, 1)], labels={0: ["red"]}, colors={0: 0, 2: 1})
    assert graph_to_json(g) == snapshot(
        '{"n":3,"edges":[[0,1],[1,2]],"labels":{"0":["red"]},"colors":{"0":0,"2":1}}'
    )


def test_parse_graph() -> None:
    g = parse_graph('{"n": 3, "edges": [[1, 2], [0, 1]], "labels": {"2": ["b", "a"]}}')
    assert g == path(3).with_labels({2: ["a", "b"]})
    assert not g.is_colored


def test_parse_graph_minimal() -> None:
    assert parse_graph('{"n": 2}') == LabeledGraph(2)


def test_dump_and_load(tmp_path: Path) -> None:
    g = path(4).with_colors({0: 0, 1: 1, 2: 1, 3: 0})
    p = tmp_path / "nested" / "p4.graph.json"
    dump_graph(g, p)
    assert load_graph(p) == g
    assert json.loads(p.read_text())["edges"] == [[0, 1], [1, 2], [2, 3]]


def test_load_data_file(data_dir: Path) -> None:
    assert load_graph(data_dir / "p3.graph.json") == path(3)


def test_load_missing_file(tmp_path: Path) -> None:
    with pytest.raises(DiffMCFileNotFoundError):
        load_graph(tmp_path / "missing.graph.json")


@pytest.mark.parametrize(
    "text",
    [
        pytest.param("not json", id="not json"),
        pytest.param('{"edges": []}', id="missing n"),
        pytest.param('{"n": -1}', id="negative n"),
        pytest.param('{"n": 2, "edges": [[0, 2]]}', id="vertex past n"),
        pytest.param('{"n": 2, "edges": [[1, 1]]}', id="self-loop"),
        pytest.param('{"n": 2, "labels": {"x": ["a"]}}', id="label key not a vertex"),
        pytest.param('{"n": 2, "colors": {"5": 0}}', id="color on missing vertex"),
        pytest.param('{"n": 2, "colors": {"0": -1}}', id="negative color"),
        pytest.param('{"n": 2, "weights": {}}', id="unknown field"),
    ],
)
def test_parse_graph_invalid(text: str) -> None:
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_document_table() -> None:
    doc = GraphDocument.from_graph(path(3).with_labels({1: ["mid"]}))
    cols, rows = doc.__cols_rows__()
    assert cols == snapshot(["Vertex", "Neighbours", "Labels", "Color"])
    assert rows == snapshot([["0", "1", "", ""], ["1", "0, 2", "mid", ""], ["2", "1", "", ""]])
