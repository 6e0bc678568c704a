"""Subject-tally kernels for the screening simulator.

One kernel contract, two implementations: a numba ``@njit`` loop (default
when numba imports) and a vectorized pure-numpy path. Select explicitly
with the ``SEQSCREEN_BACKEND`` environment variable (``numba`` or
``numpy``) or per call; the numpy path is also the automatic fallback
when numba is unavailable.

Both paths consume the same pre-drawn uniform matrix ``u`` with one row
per subject: column 0 decides disease status (u < phi), columns 1..depth
decide each serial test result (positive iff u < sensitivity for diseased
subjects, u < 1 - specificity for healthy ones). Because randomness is
positional and tallies are exact int64 counts, the two backends produce
identical results for identical inputs, in any chunking.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = ["tally_chunk", "active_backend", "HAS_NUMBA"]


def _tally_numpy(u, phi, sens, spec):
    diseased = u[:, 0] < phi
    p_pos = np.where(diseased, sens, 1.0 - spec)
    positive = u[:, 1:] < p_pos[:, None]
    runs = np.logical_and.accumulate(positive, axis=1)
    run_total = runs.sum(axis=0, dtype=np.int64)
    run_diseased = (runs & diseased[:, None]).sum(axis=0, dtype=np.int64)
    first_negative = np.int64((~positive[:, 0]).sum())
    first_negative_healthy = np.int64((~positive[:, 0] & ~diseased).sum())
    return run_total, run_diseased, first_negative, first_negative_healthy


try:
    from numba import njit

    HAS_NUMBA = True

    @njit(cache=True)
    def _tally_numba(u, phi, sens, spec):  # pragma: no cover - measured via wrapper
        depth = u.shape[1] - 1
        run_total = np.zeros(depth, dtype=np.int64)
        run_diseased = np.zeros(depth, dtype=np.int64)
        first_negative = np.int64(0)
        first_negative_healthy = np.int64(0)
        for i in range(u.shape[0]):
            diseased = u[i, 0] < phi
            p_pos = sens if diseased else 1.0 - spec
            for k in range(depth):
                if u[i, k + 1] < p_pos:
                    run_total[k] += 1
                    if diseased:
                        run_diseased[k] += 1
                else:
                    if k == 0:
                        first_negative += 1
                        if not diseased:
                            first_negative_healthy += 1
                    break
        return run_total, run_diseased, first_negative, first_negative_healthy

except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False
    _tally_numba = None


def active_backend(override: str | None = None) -> str:
    """Resolve the backend name: explicit arg > env var > numba if present."""
    choice = override or os.environ.get("SEQSCREEN_BACKEND", "").strip().lower()
    if choice not in ("", "numba", "numpy"):
        raise ValueError(f"unknown backend {choice!r}; use 'numba' or 'numpy'")
    if choice == "numba" and not HAS_NUMBA:
        raise RuntimeError("numba backend requested but numba is not importable")
    if choice == "":
        choice = "numba" if HAS_NUMBA else "numpy"
    return choice


def tally_chunk(u: np.ndarray, phi: float, sens: float, spec: float, backend: str | None = None):
    """Count positive-run and first-negative outcomes for one subject chunk.

    Returns int64 arrays/scalars: (all-positive-through-n counts for
    n = 1..depth, the diseased subset of those, first-result-negative
    count, healthy subset of that).
    """
    if active_backend(backend) == "numba":
        return _tally_numba(np.ascontiguousarray(u), phi, sens, spec)
    return _tally_numpy(u, phi, sens, spec)
