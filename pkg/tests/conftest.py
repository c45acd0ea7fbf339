import pytest

from spherica import kernels


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # Compile the JIT kernels once so timed tests measure steady-state work.
    kernels.warmup()
