import pytest

from jacgraph import Multigraph

import corpus as corpus_mod


@pytest.fixture
def banana():
    """Two vertices joined by a pair of parallel edges."""
    return Multigraph(["u", "v"], [("u", "v"), ("u", "v")])


@pytest.fixture
def triangle():
    return Multigraph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])


@pytest.fixture
def path2():
    """Two vertices joined by a single bridge."""
    return Multigraph(["u", "v"], [("u", "v")])


@pytest.fixture
def dumbbell():
    """Loop, bridge, loop."""
    return Multigraph(["x", "y"], [("x", "x"), ("x", "y"), ("y", "y")])


@pytest.fixture
def square():
    return Multigraph(
        ["a", "b", "c", "d"],
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
    )


@pytest.fixture(scope="session")
def corpus_cases():
    return corpus_mod.corpus()
