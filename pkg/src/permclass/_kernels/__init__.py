"""Kernel backend selection.

The compiled Cython backend is used when it imported cleanly and the
environment variable ``PERMCLASS_NO_EXT`` is unset; otherwise the pure
Python fallback takes over.  Both expose the same functions and produce
bit-identical results.
"""
from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("PERMCLASS_NO_EXT"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND
tpoly_mul_acc = _impl.tpoly_mul_acc
series_mul = _impl.series_mul
class_a_child_ok = _impl.class_a_child_ok
class_b_child_ok = _impl.class_b_child_ok


def get_backend(name: str | None = None):
    """Return the kernel module for ``name`` ('python', 'cython', or
    None for the active default)."""
    if name is None:
        return _impl
    if name == "python":
        return _pykernels
    if name in ("cython", "c"):
        from . import _ckernels
        return _ckernels
    raise ValueError("unknown kernel backend %r" % (name,))
