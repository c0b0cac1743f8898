# -*- coding: utf-8 -*-
"""Shared fixtures for the Clique VC Tool tests."""

##### IMPORTS #####
# Standard imports
import logging

# Third party imports
import pytest

# Local imports
from CVT import graph_core
from CVT.graph_core import Graph


##### FIXTURES #####
@pytest.fixture(name="c5")
def fixture_c5() -> Graph:
    """Cycle with edges 01, 12, 23, 34, 40."""
    return graph_core.gen_basic("cycle", 5)


@pytest.fixture(name="p3")
def fixture_p3() -> Graph:
    return graph_core.gen_basic("path", 3)


@pytest.fixture(name="p4")
def fixture_p4() -> Graph:
    """Path 0-1-2-3."""
    return graph_core.gen_basic("path", 4)


@pytest.fixture(name="c4")
def fixture_c4() -> Graph:
    return graph_core.gen_basic("cycle", 4)


@pytest.fixture(name="random_corpus")
def fixture_random_corpus() -> list[Graph]:
    """Seeded G(n, p) graphs with up to 12 vertices."""
    graphs = []
    for seed in range(200):
        n = 1 + seed % 12
        p = (2 + seed % 7) / 10
        graphs.append(graph_core.gen_random(n, p, seed))
    return graphs


@pytest.fixture(autouse=True)
def fixture_reset_logging():
    """Remove handlers the command line tool adds to the package logger."""
    yield
    root = logging.getLogger("CVT")
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()
