"""Kernel backend selection.

The compiled extension is preferred when importable.  TWPW_KERNELS=python
forces the pure fallback, TWPW_KERNELS=c demands the extension (import
fails loudly when it is missing); unset or 'auto' picks automatically.
"""

from __future__ import annotations

import os

from . import _kernels_py


def load_backend(name: str):
    """Return the kernel module for an explicit backend name."""
    if name in ("python", "py", "pure"):
        return _kernels_py
    if name in ("c", "compiled"):
        from . import _speedups

        return _speedups
    raise ValueError(f"unknown kernel backend {name!r}")


_requested = os.environ.get("TWPW_KERNELS", "auto").strip().lower() or "auto"
if _requested == "auto":
    try:
        from . import _speedups as _impl

        BACKEND = "c"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"
else:
    _impl = load_backend(_requested)
    BACKEND = "python" if _impl is _kernels_py else "c"

treewidth_dp = _impl.treewidth_dp
pathwidth_dp = _impl.pathwidth_dp


def backend() -> str:
    """Name of the active backend: 'c' or 'python'."""
    return BACKEND
