import pytest
from hypothesis import settings

from rigidkit.corpus import nonisomorphic_graphs
from rigidkit.field import Rng

settings.register_profile("suite", max_examples=30, deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def graphs_by_n():
    """One canonical representative per isomorphism class, keyed by n."""
    return {n: nonisomorphic_graphs(n) for n in range(1, 8)}


@pytest.fixture(scope="session")
def connected_by_n():
    return {n: nonisomorphic_graphs(n, connected=True) for n in range(1, 8)}


@pytest.fixture
def rng():
    return Rng(0xC0FFEE)
