import numpy as np
import pytest

from entkit import StateVector


def rand_state(rng: np.random.Generator, dims) -> StateVector:
    """Normalized Gaussian-random state on the given dims."""
    n = int(np.prod(dims))
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return StateVector(tuple(dims), v / np.linalg.norm(v))


def rand_product_state(rng: np.random.Generator, dims) -> StateVector:
    """Tensor product of independent random single-party vectors."""
    factors = []
    for d in dims:
        v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        factors.append(v / np.linalg.norm(v))
    full = factors[0]
    for f in factors[1:]:
        full = np.kron(full, f)
    return StateVector(tuple(dims), full)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
