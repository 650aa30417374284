"""Canonical graph JSON documents.

```json
{"n": 3, "edges": [[0, 1], [1, 2]], "labels": {"0": ["red"]}, "colors": {"0": 0}}
```
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any
from typing import Optional

from pydantic import ConfigDict
from pydantic import Field
from pydantic import ValidationError
from pydantic import field_validator

from diffmc.exceptions import GraphFormatError
from diffmc.exceptions import InputError
from diffmc.graphs.graph import LabeledGraph
from diffmc.models import ColsRowsType
from diffmc.models import TableRenderable
from diffmc.utils.fs import read_file
from diffmc.utils.fs import write_file

logger = logging.getLogger(__name__)


def _check_vertex_keys(v: dict[str, Any]) -> dict[str, Any]:
    for key in v:
        if not key.isdecimal():
            raise ValueError(f"vertex key {key!r} is not a decimal integer")
    return v


class GraphDocument(TableRenderable):
    """Serialized form of a `LabeledGraph`."""

    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=0)
    edges: list[tuple[int, int]] = Field(default_factory=list)
    labels: dict[str, list[str]] = Field(default_factory=dict)
    colors: dict[str, int] = Field(default_factory=dict)

    @field_validator("labels", "colors")
    @classmethod
    def _decimal_keys(cls, v: dict[str, Any]) -> dict[str, Any]:
        return _check_vertex_keys(v)

    def to_graph(self) -> LabeledGraph:
        try:
            return LabeledGraph(
                self.n,
                self.edges,
                labels={int(k): v for k, v in self.labels.items()},
                colors={int(k): c for k, c in self.colors.items()},
            )
        except InputError as e:
            raise GraphFormatError(f"Invalid graph document: {e}") from e

    @classmethod
    def from_graph(cls, g: LabeledGraph) -> GraphDocument:
        """Document for `g`. Only explicitly stored labels are written."""
        return cls(
            n=g.n,
            edges=list(g.edges()),
            labels={
                str(v): sorted(g.stored_labels(v))
                for v in g.vertices
                if g.stored_labels(v)
            },
            colors={str(v): c for v, c in enumerate(g.colors) if c is not None},
        )

    def __cols_rows__(self) -> ColsRowsType:
        cols = ["Vertex", "Neighbours", "Labels", "Color"]
        g = self.to_graph()
        rows = [
            [
                str(v),
                ", ".join(map(str, g.neighbors(v))),
                ", ".join(sorted(g.stored_labels(v))),
                "" if g.color(v) is None else str(g.color(v)),
            ]
            for v in g.vertices
        ]
        return cols, rows


class GraphList(TableRenderable):
    """A batch of graphs, as streamed by `all_graphs_up_to`."""

    graphs: list[GraphDocument] = Field(default_factory=list)

    def __cols_rows__(self) -> ColsRowsType:
        cols = ["#", "N", "Edges"]
        rows = [
            [str(i), str(doc.n), " ".join(f"{u}-{v}" for u, v in doc.edges)]
            for i, doc in enumerate(self.graphs)
        ]
        return cols, rows


def parse_graph(text: str) -> LabeledGraph:
    """Parse a canonical graph JSON string."""
    try:
        doc = GraphDocument.model_validate_json(text)
    except ValidationError as e:
        raise GraphFormatError(f"Invalid graph document: {e}") from e
    return doc.to_graph()


def graph_to_json(g: LabeledGraph, *, indent: Optional[int] = None) -> str:
    return GraphDocument.from_graph(g).model_dump_json(indent=indent)


def load_graph(path: Path) -> LabeledGraph:
    """Read a graph from a `.graph.json` file."""
    logger.debug("Loading graph from %s", path)
    try:
        return parse_graph(read_file(path))
    except GraphFormatError as e:
        raise GraphFormatError(f"{path}: {e}") from e


def dump_graph(g: LabeledGraph, path: Path) -> None:
    write_file(path, graph_to_json(g, indent=2) + "\n")
