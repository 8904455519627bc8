import json
from importlib import resources

import pytest

from tropmat import (
    build_polytope,
    enumerate_all_cells,
    enumerate_bases,
    parse_graph,
    uniform_matroid,
)


def _bundled_graph(name: str):
    text = resources.files("tropmat").joinpath(f"data/{name}.json").read_text()
    return parse_graph(text)


@pytest.fixture(scope="session")
def running_graph():
    return _bundled_graph("running_example")


@pytest.fixture(scope="session")
def running_matroid(running_graph):
    return enumerate_bases(running_graph)


@pytest.fixture(scope="session")
def running_polytope(running_matroid):
    return build_polytope(running_matroid)


@pytest.fixture(scope="session")
def running_complex(running_polytope):
    return enumerate_all_cells(running_polytope)


@pytest.fixture(scope="session")
def k4_graph():
    return _bundled_graph("k4")


@pytest.fixture(scope="session")
def k4_matroid(k4_graph):
    return enumerate_bases(k4_graph)


@pytest.fixture(scope="session")
def u23_polytope():
    return build_polytope(uniform_matroid(2, 3))


@pytest.fixture(scope="session")
def u24_polytope():
    return build_polytope(uniform_matroid(2, 4))


@pytest.fixture(scope="session")
def u33_polytope():
    return build_polytope(uniform_matroid(3, 4))
