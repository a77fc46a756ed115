"""Backend selection for the hot closest-point kernels.

The distance solver dominates Monte Carlo runtime, so it ships in two
implementations with identical semantics: a numba-compiled path for catalog
surfaces and a pure-numpy path that works for arbitrary charts.  The env var
``TUBEVOL_BACKEND`` selects the default (``numba`` when importable, else
``numpy``); surfaces without compiled chart evaluators always take the numpy
path.
"""

import os

from . import numpy_impl

try:
    from . import numba_impl
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    numba_impl = None
    HAVE_NUMBA = False

_ENV_FLAG = "TUBEVOL_BACKEND"


def _resolve_default():
    requested = os.environ.get(_ENV_FLAG, "").strip().lower()
    if requested in ("numpy", "python"):
        return "numpy"
    if requested == "numba":
        if not HAVE_NUMBA:
            raise ImportError(
                f"{_ENV_FLAG}=numba requested but numba is not importable")
        return "numba"
    if requested:
        raise ValueError(
            f"unknown {_ENV_FLAG}={requested!r}; use 'numba' or 'numpy'")
    return "numba" if HAVE_NUMBA else "numpy"


_DEFAULT_BACKEND = _resolve_default()


def active_backend():
    """Name of the backend selected at import time."""
    return _DEFAULT_BACKEND


def classify_points(points, solver, t_ceiling, backend=None):
    """Distance/side classification of ambient points against a surface.

    Dispatches to the compiled kernel when available and applicable; the two
    backends implement the same algorithm (coarse grid scan, basin dedup,
    damped Newton ascent on the model inner product).
    """
    name = backend or _DEFAULT_BACKEND
    if name == "numba" and solver.supports_kernels and HAVE_NUMBA:
        return numba_impl.classify(points, solver, t_ceiling)
    return numpy_impl.classify(points, solver, t_ceiling)
