"""Kernel backend selection.

The hot counting loops exist twice: a numba @njit version and a pure-numpy
fallback.  `GAUSSDENSITY_BACKEND` picks one of {auto, numba, numpy}; `auto`
(the default) uses numba when it imports cleanly and falls back to numpy
otherwise.  The two paths return identical integers for identical inputs --
see benchmarks/bench_backends.py for the speed comparison.
"""

import os

ENV_BACKEND = "GAUSSDENSITY_BACKEND"
ENV_THREADS = "GAUSSDENSITY_THREADS"


def _resolve() -> str:
    choice = os.environ.get(ENV_BACKEND, "auto").strip().lower()
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(
            f"{ENV_BACKEND} must be one of auto/numba/numpy, got {choice!r}"
        )
    if choice == "numpy":
        return "numpy"
    try:
        import numba  # noqa: F401
    except ImportError:
        if choice == "numba":
            raise
        return "numpy"
    # workqueue is always present and single-node deterministic; avoids the
    # TBB version probe entirely.
    import numba as _nb

    _nb.config.THREADING_LAYER = "workqueue"
    return "numba"


ACTIVE = _resolve()


def active() -> str:
    """Name of the backend in use: 'numba' or 'numpy'."""
    return ACTIVE


def using_numba() -> bool:
    return ACTIVE == "numba"


def set_thread_cap(n: int) -> int:
    """Cap the numba worker count; returns the effective cap.

    The cap never changes results, only wall time: all kernels reduce with
    exact integer addition.  On the numpy backend this is a no-op reporting 1.
    """
    if n < 1:
        raise ValueError("thread cap must be >= 1")
    if not using_numba():
        return 1
    import numba

    eff = min(n, numba.config.NUMBA_NUM_THREADS)
    numba.set_num_threads(eff)
    return eff


def default_thread_cap() -> int | None:
    """Thread cap requested via the environment, if any."""
    raw = os.environ.get(ENV_THREADS)
    if raw is None:
        return None
    return int(raw)
