"""JIT switch for the numeric kernels.

Kernels are written in the numba-compatible subset of Python and decorated
with :func:`njit`.  Setting ``HERMASYM_DISABLE_NUMBA=1`` (or running without
numba installed) leaves them as plain Python functions, which is useful for
debugging and for the benchmark comparing both paths.
"""

import os

_FLAG = os.environ.get("HERMASYM_DISABLE_NUMBA", "").strip().lower()

try:
    import numba as _numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None

JIT_ENABLED = _numba is not None and _FLAG in ("", "0", "false", "no")


def njit(*args, **kwargs):
    """``numba.njit`` when enabled, otherwise the identity decorator."""
    if JIT_ENABLED:
        kwargs.setdefault("cache", True)
        return _numba.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]

    def wrap(func):
        return func

    return wrap
