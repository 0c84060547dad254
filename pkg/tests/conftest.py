import numpy as np
import pytest

from rtstdma.degree_dist import PAPER_DISTRIBUTION
from rtstdma.protocol import fig3_instance

X, Y, Z, V, W = 1, 2, 3, 4, 5


@pytest.fixture
def paper_dist():
    return PAPER_DISTRIBUTION


@pytest.fixture
def fig3():
    return fig3_instance()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
