import numpy as np
import pytest
from hypothesis import settings

import wmix

settings.register_profile("wmix", deadline=None, max_examples=50)
settings.load_profile("wmix")


@pytest.fixture
def w3():
    return wmix.make_w_state(3)


@pytest.fixture
def w3_mixed(w3):
    return wmix.as_mixed_state(w3)


@pytest.fixture
def block_mixture():
    # equal-weight mixture of (1,1,1)/sqrt(3) and (1,1,-1)/sqrt(3):
    # separable across party 1 | rest, entangled inside {2,3}
    coeff = np.array([[1, 1, 0], [1, 1, 0], [0, 0, 1]], dtype=complex) / 3.0
    return wmix.WMixedState(wmix.SystemShape(3), 0.0, coeff)


@pytest.fixture
def diagonal_state():
    coeff = np.diag(np.array([0.2, 0.3, 0.5], dtype=complex))
    return wmix.WMixedState(wmix.SystemShape(3), 0.0, coeff)
