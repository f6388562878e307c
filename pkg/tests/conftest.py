import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from widthlab import direction_grid

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def grid2():
    return direction_grid(2, 256)


@pytest.fixture(scope="session")
def grid2_fine():
    return direction_grid(2, 4096)


@pytest.fixture(scope="session")
def grid3():
    return direction_grid(3, 2000)


def random_rotation(rng, dim):
    """Haar-ish random orthogonal matrix (determinant +-1 both allowed)."""
    q, r = np.linalg.qr(rng.standard_normal((dim, dim)))
    return q * np.sign(np.diag(r))


def random_unit(rng, dim):
    v = rng.standard_normal(dim)
    return v / np.linalg.norm(v)
