"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``MUBAR_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernel

try:
    if os.environ.get("MUBAR_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernel
except ImportError:
    _ckernel = None

BACKEND = "cython" if _ckernel is not None else "python"

python_mul = _pykernel.mul


def compiled_mul(a, b, base, cap):
    if _ckernel is None:
        raise RuntimeError("compiled kernel not available")
    out = _ckernel.mul(a, b, base, cap)
    return _pykernel.mul(a, b, base, cap) if out is None else out


mul = compiled_mul if _ckernel is not None else python_mul
