"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise the pure-Python
module is.  Setting ``VARIETYLAB_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernels_py


def _load_compiled() -> ModuleType | None:
    try:
        from . import _kernels
    except ImportError:
        return None
    return _kernels


COMPILED = _load_compiled()
_PURE = os.environ.get("VARIETYLAB_PURE_PYTHON", "") not in ("", "0")

backend: ModuleType = _kernels_py if (_PURE or COMPILED is None) else COMPILED
BACKEND = "python" if backend is _kernels_py else "cython"


def get_backend(name: str) -> ModuleType:
    """Return ``"python"`` or ``"cython"`` kernels explicitly (for tests and benchmarks)."""
    if name == "python":
        return _kernels_py
    if name == "cython":
        if COMPILED is None:
            raise ImportError("compiled kernels are not built")
        return COMPILED
    raise ValueError(f"unknown backend {name!r}")


def transformation_closure(gens, cap):
    return backend.transformation_closure(gens, cap)


def cayley_table(right, parent, letter):
    return backend.cayley_table(right, parent, letter)


def find_identity_failure(table, omega, period, one, prog_l, prog_r, nvars, domain, leq):
    return backend.find_identity_failure(table, omega, period, one, prog_l, prog_r, nvars, domain, leq)
