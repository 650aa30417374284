from __future__ import annotations

from collections.abc import Generator
from collections.abc import Iterator
from pathlib import Path
from typing import Any

import pytest
from typer.testing import CliRunner

from diffmc.app import StatefulApp
from diffmc.config.model import Config
from diffmc.graphs.generators import cycle
from diffmc.graphs.generators import edgeless
from diffmc.graphs.generators import half_graph
from diffmc.graphs.generators import path
from diffmc.graphs.graph import LabeledGraph
from diffmc.graphs.io import dump_graph
from diffmc.main import app
from diffmc.state import State
from diffmc.state import get_state

DATA_DIR = Path(__file__).parent / "data"

# Read sample files once per test run to avoid too much I/O
TOML_CONFIG = DATA_DIR / "diffmc.toml"
TOML_CONFIG_STR = TOML_CONFIG.read_text()


@pytest.fixture(name="app")
def _app() -> Iterator[StatefulApp]:
    yield app


@pytest.fixture(name="runner")
def runner() -> Iterator[CliRunner]:
    yield CliRunner()


@pytest.fixture()
def data_dir() -> Iterator[Path]:
    yield DATA_DIR


@pytest.fixture()
def config_path(tmp_path: Path) -> Iterator[Path]:
    config_copy = tmp_path / "diffmc.toml"
    config_copy.write_text(TOML_CONFIG_STR)
    yield config_copy


@pytest.fixture(name="config")
def config(tmp_path: Path) -> Iterator[Config]:
    """Return a sample config."""
    conf = Config.sample_config()
    # Set up logging for the test environment
    log_file = tmp_path / "diffmc.log"
    conf.logging.log_file = log_file
    conf.logging.log_level = "DEBUG"  # we want to see all logs
    yield conf


@pytest.fixture(name="state")
def state(config: Config) -> Iterator[State]:
    """Return a fresh State object with a config.

    Modifies the State singleton to ensure a fresh state is returned
    each time.
    """
    State._instance = None  # pyright: ignore[reportPrivateUsage]
    state = get_state()
    state.config = config
    yield state
    # reset after test
    State._instance = None  # pyright: ignore[reportPrivateUsage]


@pytest.fixture()
def p3() -> LabeledGraph:
    return path(3)


@pytest.fixture()
def c5() -> LabeledGraph:
    return cycle(5)


@pytest.fixture()
def half3() -> LabeledGraph:
    return half_graph(3)


@pytest.fixture()
def k3bar() -> LabeledGraph:
    return edgeless(3)


@pytest.fixture()
def graph_file(tmp_path: Path) -> Iterator[Any]:
    """Factory writing a graph to a `.graph.json` file in `tmp_path`."""

    def write(g: LabeledGraph, name: str = "g") -> Path:
        p = tmp_path / f"{name}.graph.json"
        dump_graph(g, p)
        return p

    yield write


@pytest.fixture(name="no_color")
def no_color() -> Generator[Any, Any, Any]:
    """Disable color in a test."""
    import os

    os.environ["NO_COLOR"] = "1"
    yield
    os.environ.pop("NO_COLOR", None)
