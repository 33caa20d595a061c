"""Pick the backtracking kernel at import time.

The compiled ``_ckernel`` is used when it was built; set
``GTRIPLE_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernel

KERNELS = {"python": _pykernel.backtrack}

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None
else:
    KERNELS["cython"] = _ckernel.backtrack

if os.environ.get("GTRIPLE_PURE_PYTHON") or "cython" not in KERNELS:
    BACKEND = "python"
else:
    BACKEND = "cython"

backtrack = KERNELS[BACKEND]


def get_kernel(name: str | None = None):
    if name is None:
        return backtrack
    try:
        return KERNELS[name]
    except KeyError:
        raise ValueError(f"kernel {name!r} unavailable; have {sorted(KERNELS)}") from None
