"""Kernel backend selection.

The batched kernels ship in two equivalent implementations: numba-compiled
loops (the default whenever numba is installed) and pure-numpy vectorized
code.  Set ``PAULIQ_BACKEND=numpy`` to force the fallback, or
``PAULIQ_BACKEND=numba`` to insist on the compiled path (import fails if
numba is missing).  The choice is read once at import time and only affects
throughput, never results beyond last-ulp rounding.
"""

import os

ENV_VAR = "PAULIQ_BACKEND"
_CHOICES = ("auto", "numba", "numpy")


def _select():
    choice = os.environ.get(ENV_VAR, "auto").strip().lower() or "auto"
    if choice not in _CHOICES:
        raise ValueError(
            f"{ENV_VAR} must be one of {'/'.join(_CHOICES)}, got {choice!r}"
        )
    if choice == "numpy":
        from . import _kernels_numpy
        return _kernels_numpy, "numpy"
    try:
        from . import _kernels_numba
    except ImportError:
        if choice == "numba":
            raise ImportError(
                f"{ENV_VAR}=numba was requested but numba is not importable"
            ) from None
        from . import _kernels_numpy
        return _kernels_numpy, "numpy"
    return _kernels_numba, "numba"


KERNELS, BACKEND_NAME = _select()
