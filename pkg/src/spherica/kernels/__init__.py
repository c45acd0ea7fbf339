"""Hot numeric kernels with a numba backend and a pure-numpy fallback.

The backend is chosen once at import from the environment variable
``SPHERICA_BACKEND``:

* ``auto`` (default): use numba when importable, else numpy;
* ``numba``: require the JIT backend;
* ``numpy``: force the pure-numpy fallback.

``use_backend()`` switches at runtime (used by the benchmark and tests).
"""

from __future__ import annotations

import os

import numpy as np

from . import _numpy as _np_impl

_VALID = ("auto", "numba", "numpy")

_active: str = "numpy"
_impl = _np_impl


def _resolve(choice: str):
    if choice not in _VALID:
        raise ValueError(f"SPHERICA_BACKEND must be one of {_VALID}, got {choice!r}")
    if choice == "numpy":
        return "numpy", _np_impl
    try:
        from . import _numba as _nb_impl
        return "numba", _nb_impl
    except ImportError:
        if choice == "numba":
            raise
        return "numpy", _np_impl


def use_backend(choice: str) -> str:
    """Select the kernel backend; returns the name actually activated."""
    global _active, _impl
    _active, _impl = _resolve(choice)
    return _active


def active_backend() -> str:
    return _active


def cayley_table(elems: np.ndarray) -> np.ndarray:
    """Multiplication table of a closed set of permutations.

    ``elems`` is (n, d) int32 with ``elems[0]`` the identity; entry [a, b] of
    the result is the index c with ``elems[c] == elems[a] o elems[b]`` where
    ``(p o q)(i) = p[q[i]]``.
    """
    elems = np.ascontiguousarray(elems, dtype=np.int32)
    order = np.lexsort(elems.T[::-1]).astype(np.int64)
    sorted_rows = np.ascontiguousarray(elems[order])
    return _impl.cayley_core(elems, sorted_rows, order)


def find_rows(elems: np.ndarray, queries: np.ndarray) -> np.ndarray:
    """Indices into ``elems`` of each query row; -1 where absent."""
    elems = np.ascontiguousarray(elems, dtype=np.int32)
    queries = np.ascontiguousarray(queries, dtype=np.int32)
    order = np.lexsort(elems.T[::-1]).astype(np.int64)
    sorted_rows = np.ascontiguousarray(elems[order])
    return _impl.find_rows_core(sorted_rows, order, queries)


def convolve_table(f: np.ndarray, g: np.ndarray, mul: np.ndarray, inv: np.ndarray) -> np.ndarray:
    """(f * g)(x) = (1/n) sum_y f(y) g(y^-1 x) over a full multiplication table."""
    f = np.ascontiguousarray(f, dtype=np.complex128)
    g = np.ascontiguousarray(g, dtype=np.complex128)
    return _impl.convolve_core(f, g, mul, inv)


def coset_counts(mul: np.ndarray, inv: np.ndarray, coset_of: np.ndarray, reps: np.ndarray) -> np.ndarray:
    """Structure counts C[i, j, k] = #{y : y in class i and y^-1 r_k in class j}."""
    return _impl.coset_counts_core(
        mul,
        np.ascontiguousarray(inv, dtype=np.int32),
        np.ascontiguousarray(coset_of, dtype=np.int32),
        np.ascontiguousarray(reps, dtype=np.int32),
    )


def jacobi_singular_values(a: np.ndarray, tol: float = 1e-14, max_sweeps: int = 60) -> np.ndarray:
    """Singular values of a complex matrix by one-sided Jacobi, descending.

    Cyclic sweeps orthogonalize column pairs; on convergence the column norms
    are the singular values.
    """
    a = np.array(a, dtype=np.complex128, order="F", copy=True)
    if a.ndim != 2:
        raise ValueError("expected a matrix")
    sv = _impl.jacobi_core(a, float(tol), int(max_sweeps))
    return np.sort(sv)[::-1]


def warmup() -> None:
    """Trigger JIT compilation of every kernel on tiny inputs."""
    elems = np.array([[0, 1], [1, 0]], dtype=np.int32)
    mul = cayley_table(elems)
    find_rows(elems, elems)
    inv = np.array([0, 1], dtype=np.int32)
    f = np.array([1.0 + 0j, 2.0 + 0j])
    convolve_table(f, f, mul, inv)
    coset_counts(mul, inv, np.array([0, 1], dtype=np.int32), np.array([0, 1], dtype=np.int32))
    jacobi_singular_values(np.array([[1.0, 2.0], [0.5j, 1.0]], dtype=np.complex128))


use_backend(os.environ.get("SPHERICA_BACKEND", "auto").strip().lower() or "auto")
