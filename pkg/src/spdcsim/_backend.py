"""Kernel backend selection.

Two interchangeable implementations of the quadrature kernels exist: a
vectorized numpy one and a numba-compiled one (explicit loops, cache=True,
sequential so results are bit-reproducible run to run).  Selection:

    SPDCSIM_BACKEND=numba   force numba (error if numba is missing)
    SPDCSIM_BACKEND=numpy   force the pure-numpy path
    unset / "auto"          numba when importable, else numpy

Resolution is deferred to the first kernel call so that code paths that never
touch a kernel (dispersion solves, the CLI's scan-symmetric) never pay the
numba import.
"""

import os

from .errors import ConfigError

_ACTIVE = None  # (name, module) once resolved


def _load(choice):
    if choice == "numpy":
        from . import _kernels_numpy

        return ("numpy", _kernels_numpy)
    # numba path
    from . import _kernels_numba

    return ("numba", _kernels_numba)


def resolve():
    """Return (backend_name, implementation_module), resolving lazily."""
    global _ACTIVE
    if _ACTIVE is not None:
        return _ACTIVE
    choice = os.environ.get("SPDCSIM_BACKEND", "auto").strip().lower() or "auto"
    if choice not in ("auto", "numba", "numpy"):
        raise ConfigError(
            f"SPDCSIM_BACKEND must be 'numba', 'numpy' or 'auto', got {choice!r}"
        )
    if choice == "auto":
        try:
            _ACTIVE = _load("numba")
        except ImportError:
            _ACTIVE = _load("numpy")
    else:
        try:
            _ACTIVE = _load(choice)
        except ImportError as exc:
            raise ConfigError(
                f"backend {choice!r} requested but not importable: {exc}"
            ) from None
    return _ACTIVE


def backend_name():
    return resolve()[0]


def set_backend(name):
    """Force a backend programmatically (tests, benchmarks).  name in
    {'numba', 'numpy', 'auto'}; returns the active backend name."""
    global _ACTIVE
    if name not in ("auto", "numba", "numpy"):
        raise ConfigError(f"unknown backend {name!r}")
    _ACTIVE = None
    if name != "auto":
        try:
            _ACTIVE = _load(name)
        except ImportError as exc:
            raise ConfigError(
                f"backend {name!r} requested but not importable: {exc}"
            ) from None
        return _ACTIVE[0]
    return resolve()[0]
