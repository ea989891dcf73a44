"""Kernel backend selection.

The hot series loops exist twice: numba-jitted (_kernels_numba) and pure
numpy (_kernels_numpy). The QGAMMA_BACKEND environment variable picks one:

    unset / "numba"  -> numba kernels; silently falls back to numpy when
                        numba is not importable (unless explicitly requested)
    "numpy"          -> pure-numpy kernels

Selection happens once at import. Numerical results agree between backends
to a few ulps; benchmarks/bench_backends.py compares their speed.
"""

import os

_requested = os.environ.get("QGAMMA_BACKEND", "").strip().lower()

if _requested not in ("", "numba", "numpy"):
    raise RuntimeError(
        f"unsupported QGAMMA_BACKEND={_requested!r}; use 'numba' or 'numpy'"
    )

if _requested == "numpy":
    from . import _kernels_numpy as kernels

    BACKEND = "numpy"
else:
    try:
        from . import _kernels_numba as kernels

        BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        from . import _kernels_numpy as kernels

        BACKEND = "numpy"

STATUS_OK = kernels.STATUS_OK
STATUS_MAX_TERMS = kernels.STATUS_MAX_TERMS
