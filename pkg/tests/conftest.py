"""Shared fixtures and small named graphs for the test suite."""

import pytest

from doubleroman.corpus import complete_graph, cycle_graph, path_graph, star_graph
from doubleroman.graphs import Graph


@pytest.fixture
def k1():
    return complete_graph(1)


@pytest.fixture
def k2():
    return complete_graph(2)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def star4():
    """K_{1,3}: center 0 with three leaves."""
    return star_graph(4)


@pytest.fixture
def star5():
    """K_{1,4}: center 0 with four leaves."""
    return star_graph(5)
