"""Kernel selection: compiled extension when available and safe,
pure-Python twin otherwise.

JACGRAPH_PURE=1 disables the compiled kernel entirely.  Independent of
that switch, a call whose operand bound leaves the signed 64-bit range is
routed to the pure kernel, which computes with Python integers.
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("JACGRAPH_PURE") == "1":  # pragma: no cover - env dependent
    _speedups = None
else:
    try:
        from . import _speedups
    except ImportError:  # pragma: no cover - build dependent
        _speedups = None

HAVE_SPEEDUPS = _speedups is not None

MODE_SEMISTABLE = _kernel_py.MODE_SEMISTABLE
MODE_QUASISTABLE = _kernel_py.MODE_QUASISTABLE
MODE_STABLE = _kernel_py.MODE_STABLE

# headroom below 2**63 for the products and sums formed inside the kernel
FAST_BOUND = 1 << 60

# subset scans touch 2**n masks; refuse beyond this many vertices
SUBSET_SCAN_LIMIT = 20


def select(value_bound: int):
    """The kernel module to use for operands bounded by ``value_bound``."""
    if _speedups is not None and value_bound < FAST_BOUND:
        return _speedups
    return _kernel_py


def implementations():
    """Available kernel modules, compiled one first."""
    mods = []
    if _speedups is not None:
        mods.append(_speedups)
    mods.append(_kernel_py)
    return mods


def implementation_name() -> str:
    return "compiled" if _speedups is not None else "pure"
