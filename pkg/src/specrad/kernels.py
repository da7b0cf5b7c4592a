"""Contraction kernels over sparse coordinate data.

The inner loop of every power-method iteration is the tensor-times-vector
contraction, evaluated over the stored (row, trailing-indices, value)
triples.  Two interchangeable implementations exist:

* a numba-jitted loop (default when numba is importable), and
* a vectorized pure-numpy fallback.

Selection happens once at import time from the SPECRAD_BACKEND environment
variable: "numba", "numpy", or "auto" (the default).  ``benchmarks/``
contains a script comparing the two.
"""

import os

import numpy as np


def contract_numpy(rows, trail, vals, x, n):
    """Pure-numpy contraction: y[i] = sum of vals * prod(x[trail]) per row."""
    if vals.size == 0:
        return np.zeros(n)
    contrib = vals * np.prod(x[trail], axis=1)
    return np.bincount(rows, weights=contrib, minlength=n)


def _build_numba_kernel():
    from numba import njit

    @njit(cache=True)
    def contract_numba(rows, trail, vals, x, n):
        y = np.zeros(n)
        for e in range(vals.shape[0]):
            p = vals[e]
            for k in range(trail.shape[1]):
                p *= x[trail[e, k]]
            y[rows[e]] += p
        return y

    return contract_numba


def _select_backend():
    requested = os.environ.get("SPECRAD_BACKEND", "auto").lower()
    if requested not in ("auto", "numba", "numpy"):
        raise ValueError(f"SPECRAD_BACKEND must be auto|numba|numpy, got {requested!r}")
    if requested == "numpy":
        return "numpy", contract_numpy
    try:
        kernel = _build_numba_kernel()
    except ImportError:
        if requested == "numba":
            raise
        return "numpy", contract_numpy
    return "numba", kernel


_BACKEND_NAME, _CONTRACT = _select_backend()


def backend_name():
    """Name of the active contraction backend ("numba" or "numpy")."""
    return _BACKEND_NAME


def contract_coo(rows, trail, vals, x, n):
    """Contract COO tensor data against vector x using the active backend.

    rows: int64 (nnz,) zero-based leading indices
    trail: int64 (nnz, m-1) zero-based trailing indices
    vals: float64 (nnz,)
    x: float64 (n,)
    """
    return _CONTRACT(rows, trail, vals, x, n)
