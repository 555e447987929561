"""Kernel selection: the compiled extension when importable, else the Python twin.

Set ``STRONGTIE_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

python_kernels = _pykernels
compiled_kernels = None
try:
    from . import _ckernels as compiled_kernels
except ImportError:
    pass

if compiled_kernels is not None and os.environ.get("STRONGTIE_PURE_PYTHON", "") in ("", "0"):
    active = compiled_kernels
else:
    active = python_kernels

BACKEND = "compiled" if active is compiled_kernels else "python"


def get(backend=None):
    if backend is None:
        return active
    if backend == "python":
        return python_kernels
    if backend == "compiled":
        if compiled_kernels is None:
            raise ImportError("compiled kernels are not built")
        return compiled_kernels
    raise ValueError(f"unknown kernel backend {backend!r}")
