"""Reduction-kernel backend selection.

The compiled kernel is used when its extension module imported cleanly;
otherwise (or when ``SINGSPEC_PURE_KERNEL`` is set in the environment) the
pure-Python twin takes over.  ``use_backend`` exists so the benchmark and the
backend-equivalence tests can swap implementations explicitly.
"""

import os

from . import _kernel as _pure

try:
    from . import _kernel_c as _compiled
except ImportError:
    _compiled = None

if os.environ.get("SINGSPEC_PURE_KERNEL") or _compiled is None:
    _active = _pure
else:
    _active = _compiled


def active():
    """The module currently providing the kernel functions."""
    return _active


def backend_name() -> str:
    return _active.BACKEND


def available_backends() -> tuple[str, ...]:
    return ("python",) if _compiled is None else ("python", "cython")


def use_backend(name: str):
    """Force a backend ("python" or "cython").  Returns the selected module."""
    global _active
    if name == "python":
        _active = _pure
    elif name == "cython":
        if _compiled is None:
            raise ValueError("compiled kernel is not available")
        _active = _compiled
    else:
        raise ValueError(f"unknown backend {name!r}")
    return _active
