import numpy as np
import pytest

from qconic import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile/warm the jitted kernels once so timed tests measure the
    algorithms, not JIT startup."""
    zs = np.array([0.1 + 0.2j, -0.3 + 0.0j])
    _kernels.horner_eval(np.array([1.0, 2.0, 3.0]), zs)
    _kernels.agm_k(np.array([0.1, 0.5]))
    _kernels.carlson_rf(zs, zs + 1.0, np.ones(2, complex))


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
