import pytest

from qgamma import backend


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # Trigger any JIT compilation before timed/deadlined test bodies run.
    backend.kernels.log_qpochhammer(0.5, 0.5, 1e-6, 1000)
    backend.kernels.geometric_series(1.0, 0.5, 1e-6, 1000)
    backend.kernels.digamma_partial_sum(2.0, 16)
