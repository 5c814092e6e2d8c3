import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make `oracles` importable

from imeasure import Distribution, Graph

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def load_graph(name: str) -> Graph:
    return Graph.from_json(json.loads(fixture_path(name).read_text()))


def load_distribution(name: str) -> Distribution:
    return Distribution.from_json(json.loads(fixture_path(name).read_text()))


@pytest.fixture
def pockets9() -> Graph:
    return load_graph("graph_pockets9.json")


@pytest.fixture
def sep5() -> Graph:
    return load_graph("graph_sep5.json")


@pytest.fixture
def tree12() -> Graph:
    return load_graph("tree12.json")


@pytest.fixture
def bridges8() -> Graph:
    return load_graph("bridges8.json")


@pytest.fixture
def caterpillar6() -> Graph:
    return load_graph("caterpillar6.json")


@pytest.fixture
def star4() -> Graph:
    return load_graph("star4.json")


@pytest.fixture
def xor3() -> Distribution:
    return load_distribution("xor3.json")
