import pytest

from dsitnikov import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile every kernel once so timed tests measure runtime, not JIT."""
    _kernels.warmup()
