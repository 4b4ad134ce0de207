import pytest

from mcgraph.smallgraphs import connected_corpus


@pytest.fixture(scope="session")
def corpus6():
    """Nonisomorphic connected graphs, 2..6 vertices, at most 10 edges."""
    return connected_corpus(6, max_edges=10)
