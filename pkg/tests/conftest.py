import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from torpersist.field import Field  # noqa: E402
from torpersist.ring import RingPresentation  # noqa: E402


def make_ring(names, relations, p=101, weights=None):
    return RingPresentation(Field(p), list(names), weights=weights, relations=list(relations))


@pytest.fixture(scope="session")
def E():
    return make_ring("xy", ["x^2", "y^2"])


@pytest.fixture(scope="session")
def G():
    return make_ring("xy", ["x^2", "x*y", "y^2"])


@pytest.fixture(scope="session")
def Q3():
    return make_ring("xyz", ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"])
