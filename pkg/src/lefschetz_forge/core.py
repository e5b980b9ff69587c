"""Kernel selection: compiled extension if available, numpy fallback otherwise.

``KERNEL_BACKEND`` records which one is active so reports and benchmarks
can say what actually ran.  Both implementations share one contract:
``rref_mod(a, p)`` reduces a C-contiguous int64 array in place and
returns the pivot column list.
"""

from __future__ import annotations

try:
    from . import _core as _impl

    KERNEL_BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on build environment
    from . import _core_py as _impl

    KERNEL_BACKEND = "python"

rref_mod = _impl.rref_mod


def rref_mod_python(a, p):
    """Always-available fallback entry point (used by tests and benchmarks)."""
    from . import _core_py

    return _core_py.rref_mod(a, p)
