"""Backend selection for the subset-enumeration kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is loaded. Setting ``SPINMULT_PURE=1`` forces the fallback.
"""
import os
from array import array

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("SPINMULT_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        pass


def get_impl(backend=None):
    """Return the kernel module for ``backend`` ('cython', 'python' or None for default)."""
    if backend is None:
        return _impl
    if backend == "python":
        return _pykernels
    if backend == "cython":
        from . import _ckernels
        return _ckernels
    raise ValueError(f"unknown backend {backend!r}")


def available_backends():
    out = ["python"]
    try:
        from . import _ckernels  # noqa: F401
        out.insert(0, "cython")
    except ImportError:
        pass
    return out


def as_int64(values):
    return array("q", values)


def gray_code_counts(delta, base, start, stop, backend=None):
    return get_impl(backend).gray_code_counts(as_int64(delta), base, start, stop)


def gray_code_match(delta, base, start, stop, target, backend=None):
    return get_impl(backend).gray_code_match(as_int64(delta), base, start, stop, target)
