"""Kernel backend selection.

The hot loops (exp/log table construction, plane scans, per-x counting
and enumeration) have two interchangeable implementations:

  * ``ffconics._kernels_cy`` — Cython extension, used when importable;
  * ``ffconics.kernels_ref`` — vectorized numpy fallback.

Both produce bit-identical tables and solution arrays (the test suite
enforces this), so selection only affects speed.  Set the environment
variable ``FFCONICS_BACKEND=reference`` (or ``compiled``) to override.
"""
from __future__ import annotations

import os

from . import kernels_ref as _reference

try:
    from . import _kernels_cy as _compiled
except ImportError:  # extension not built; pure fallback
    _compiled = None

_BACKENDS = {"reference": _reference, "compiled": _compiled}


def get(name=None):
    """Return the kernel module for `name`, or the active default."""
    if name is None:
        name = os.environ.get("FFCONICS_BACKEND")
    if name is None:
        return _compiled if _compiled is not None else _reference
    if name not in _BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}")
    mod = _BACKENDS[name]
    if mod is None:
        raise RuntimeError("compiled kernels requested but the extension is not built")
    return mod


def active():
    return get()


def backend_name() -> str:
    return "compiled" if active() is _compiled else "reference"


def available_backends() -> list:
    return [k for k, v in _BACKENDS.items() if v is not None]
