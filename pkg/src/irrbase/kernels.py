"""Selects the orbit kernel at import: compiled if built, numpy otherwise.

Set ``IRRBASE_PURE=1`` to force the numpy implementation.
"""

from __future__ import annotations

import os

from . import _orbit_numpy

BACKEND = "numpy"
_compiled = None

if os.environ.get("IRRBASE_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _orbitcore as _compiled
        BACKEND = "compiled"
    except ImportError:  # extension not built
        _compiled = None

_impl = _compiled if _compiled is not None else _orbit_numpy


def backend(name: str | None = None):
    """The kernel module for ``name`` ('compiled', 'numpy') or the default."""
    if name is None:
        return _impl
    if name == "numpy":
        return _orbit_numpy
    if name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled orbit kernel is not available")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


def orbit_labels(tables, tops, B, k, threads=1, backend_name=None):
    return backend(backend_name).orbit_labels(tables, tops, B, k, threads=threads)


def orbit_size(tables, tops, B, k, seed, threads=1, backend_name=None):
    return int(backend(backend_name).orbit_size(tables, tops, B, k, seed, threads=threads))
