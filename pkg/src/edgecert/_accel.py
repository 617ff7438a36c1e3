"""JIT switch.

Hot kernels are compiled with numba when it is importable and the
``EDGECERT_NO_JIT`` environment variable is unset (or ``0``). Otherwise the
same functions run as plain NumPy code. The flag is read once at import.
"""

import os

_flag = os.environ.get("EDGECERT_NO_JIT", "").strip().lower()
JIT_REQUESTED = _flag in ("", "0", "false", "no")

try:
    import numba

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    NUMBA_AVAILABLE = False

USE_JIT = JIT_REQUESTED and NUMBA_AVAILABLE


def compile_kernel(func):
    """Return the numba-compiled version of ``func`` (lazy, cached on disk)."""
    if not NUMBA_AVAILABLE:
        return func
    return numba.njit(cache=True)(func)

