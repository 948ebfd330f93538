"""Kernel backend selection.

The compiled Cython kernel is used when available; set BIOPS_PURE_PYTHON=1
(or BIOPS_KERNEL=py) to force the pure-Python fallback.
"""

import os


def load_backend():
    forced = os.environ.get("BIOPS_KERNEL", "").strip().lower()
    if forced in ("py", "python") or os.environ.get("BIOPS_PURE_PYTHON"):
        from . import pykernel
        return pykernel
    try:
        from . import ckernel
        return ckernel
    except ImportError:
        from . import pykernel
        return pykernel


kernel = load_backend()
BACKEND = kernel.__name__.rsplit(".", 1)[-1]
