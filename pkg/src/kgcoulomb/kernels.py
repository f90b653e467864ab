"""Backend selection for the recurrence kernels.

The compiled extension is used when it was built; otherwise the numpy
fallback is loaded. Setting ``KGCOULOMB_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("KGCOULOMB_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
else:
    _impl = _pykernels

laguerre = _impl.laguerre
legendre_stripped = _impl.legendre_stripped
gauss_legendre = _impl.gauss_legendre

__all__ = ["BACKEND", "laguerre", "legendre_stripped", "gauss_legendre"]
