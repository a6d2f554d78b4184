"""Backend selection for the hot kernels.

Set ``RIF_DISABLE_JIT=1`` to skip numba entirely: vectorisable kernels then run
their pure-numpy variants and the loop kernels (DFS) run as plain Python.
"""

import os

_flag = os.environ.get("RIF_DISABLE_JIT", "").strip().lower()
DISABLE_JIT = _flag not in ("", "0", "false", "no")

try:
    if DISABLE_JIT:
        raise ImportError
    import numba
except ImportError:
    numba = None

HAVE_JIT = numba is not None


def jit(fn):
    """Compile ``fn`` with numba in nopython mode, or return it unchanged."""
    if HAVE_JIT:
        return numba.njit(cache=True, nogil=True)(fn)
    return fn


def backend_name() -> str:
    return "numba" if HAVE_JIT else "numpy"
