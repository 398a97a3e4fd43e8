import math

import numpy as np
import pytest

from morreycircle import make_step


def random_step(rng, max_segments=12, value_lo=-10.0, value_hi=10.0):
    """Random step function with distinct breakpoints and mixed values."""
    k = int(rng.integers(1, max_segments + 1))
    bps = np.sort(rng.uniform(-math.pi, math.pi, size=k))
    while len(np.unique(bps)) < k or (k > 1 and np.min(np.diff(bps)) < 1e-9):
        bps = np.sort(rng.uniform(-math.pi, math.pi, size=k))
    vals = rng.uniform(value_lo, value_hi, size=k)
    # sprinkle zeros so zero sets and gaps get exercised
    vals[rng.random(size=k) < 0.25] = 0.0
    return make_step(bps, vals)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
