from __future__ import annotations

import pytest
from inline_snapshot import snapshot

from diffmc.checks import CheckBounds
from diffmc.checks import CheckSuite
from diffmc.checks import CheckSuiteResult
from diffmc.checks import Counterexample
from diffmc.checks import get_suite
from diffmc.checks import run_suite
from diffmc.config.model import CheckConfig
from diffmc.exceptions import UnknownSuiteError
from diffmc.graphs.generators import path
from diffmc.graphs.io import GraphDocument

SMALL = CheckBounds(max_n=3, max_m=1, max_k=1, random_graphs=0)


@pytest.mark.parametrize("suite", list(CheckSuite))
def test_suites_pass_on_small_bounds(suite: CheckSuite) -> None:
    result = run_suite(suite, SMALL)
    assert result.passed, result.counterexamples
    assert result.max_n == 3
    assert result.max_m == 1


def test_locality_on_longer_paths() -> None:
    result = run_suite(CheckSuite.LOCALITY, CheckBounds(max_n=7, max_m=1))
    assert result.passed
    assert result.instances > 0


def test_oracle_equiv_with_random_graphs() -> None:
    bounds = CheckBounds(max_n=2, max_m=3, random_graphs=2, random_sizes=[5])
    result = run_suite(CheckSuite.ORACLE_EQUIV, bounds)
    assert result.passed


def test_default_bounds() -> None:
    result = run_suite("half_graph", CheckBounds(max_n=3))
    assert result.max_m == 1
    assert result.passed


@pytest.mark.parametrize(
    "name, suite",
    [
        pytest.param("restriction", CheckSuite.RESTRICTION, id="own name"),
        pytest.param("Restriction", CheckSuite.RESTRICTION, id="case"),
        pytest.param("xi-agreement", CheckSuite.XI_AGREEMENT, id="dashes"),
        pytest.param("lemma51", CheckSuite.RESTRICTION, id="alias restriction"),
        pytest.param("lemma62", CheckSuite.EF_COMPONENTS, id="alias ef_components"),
        pytest.param("lemma61", CheckSuite.LOCALITY, id="alias locality"),
        pytest.param("LEMMA65", CheckSuite.COMPLEMENT, id="alias complement"),
    ],
)
def test_get_suite(name: str, suite: CheckSuite) -> None:
    assert get_suite(name) == suite


def test_unknown_suite() -> None:
    with pytest.raises(UnknownSuiteError, match="oracle_equiv"):
        run_suite("no_such_suite")


def test_bounds_from_config() -> None:
    config = CheckConfig(seed=3, random_graphs=4, random_sizes=[6], edge_probability=0.25)
    bounds = CheckBounds.from_config(config, max_n=4, seed=None, threads=2)
    assert bounds.seed == 3
    assert bounds.max_n == 4
    assert bounds.random_graphs == 4
    assert bounds.edge_probability == 0.25
    assert bounds.threads == 2


def test_failed_result_table() -> None:
    result = CheckSuiteResult(
        suite=CheckSuite.TYPES,
        instances=3,
        max_n=2,
        max_m=1,
        counterexamples=[
            Counterexample(
                graph=GraphDocument.from_graph(path(2)),
                parameters={"u": 0, "v": 1},
                observed="True",
                expected="False",
            )
        ],
    )
    assert not result.passed
    _, rows = result.__cols_rows__()
    assert rows[0][:4] == snapshot(["types", "n <= 2, m <= 1", "3", "1"])
