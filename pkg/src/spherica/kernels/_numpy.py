"""Pure-numpy kernel implementations (fallback backend)."""

from __future__ import annotations

import numpy as np

_CHUNK = 512


def _row_keys(rows: np.ndarray) -> np.ndarray:
    """Encode int32 rows as fixed-width big-endian byte strings.

    Byte order of the encoding matches lexicographic order of the rows, so
    numpy sort/searchsorted on the keys is a row-wise lexicographic search.
    """
    n, d = rows.shape
    be = np.ascontiguousarray(rows.astype(">u4"))
    return be.view(f"S{4 * d}").reshape(n)


def find_rows_core(sorted_rows: np.ndarray, order: np.ndarray, queries: np.ndarray) -> np.ndarray:
    keys = _row_keys(sorted_rows)
    qkeys = _row_keys(queries)
    pos = np.searchsorted(keys, qkeys)
    out = np.full(queries.shape[0], -1, dtype=np.int64)
    ok = pos < keys.shape[0]
    hit = ok.copy()
    hit[ok] = keys[pos[ok]] == qkeys[ok]
    out[hit] = order[pos[hit]]
    return out


def cayley_core(elems: np.ndarray, sorted_rows: np.ndarray, order: np.ndarray) -> np.ndarray:
    n = elems.shape[0]
    keys = _row_keys(sorted_rows)
    mul = np.empty((n, n), dtype=np.int32)
    for start in range(0, n, _CHUNK):
        block = elems[start:start + _CHUNK]
        # products[a, b] = block[a] o elems[b], flattened to rows
        products = block[:, elems].reshape(-1, elems.shape[1])
        qkeys = _row_keys(products)
        pos = np.searchsorted(keys, qkeys)
        if np.any(pos >= n) or np.any(keys[np.minimum(pos, n - 1)] != qkeys):
            raise ValueError("product of elements not found: set is not closed")
        mul[start:start + _CHUNK] = order[pos].reshape(block.shape[0], n).astype(np.int32)
    return mul


def convolve_core(f: np.ndarray, g: np.ndarray, mul: np.ndarray, inv: np.ndarray) -> np.ndarray:
    n = f.shape[0]
    out = np.zeros(n, dtype=np.complex128)
    for start in range(0, n, _CHUNK):
        ys = slice(start, min(start + _CHUNK, n))
        out += f[ys] @ g[mul[inv[ys], :]]
    return out / n


def coset_counts_core(mul: np.ndarray, inv: np.ndarray, coset_of: np.ndarray, reps: np.ndarray) -> np.ndarray:
    s = reps.shape[0]
    i_arr = coset_of.astype(np.int64)
    counts = np.empty((s, s, s), dtype=np.int64)
    for k in range(s):
        j_arr = coset_of[mul[inv, reps[k]]].astype(np.int64)
        flat = np.bincount(i_arr * s + j_arr, minlength=s * s)
        counts[:, :, k] = flat.reshape(s, s)
    return counts


def jacobi_core(a: np.ndarray, tol: float, max_sweeps: int) -> np.ndarray:
    ncols = a.shape[1]
    for _ in range(max_sweeps):
        rotated = False
        for p in range(ncols - 1):
            for q in range(p + 1, ncols):
                ap = a[:, p]
                aq = a[:, q]
                alpha = float(np.real(np.vdot(ap, ap)))
                beta = float(np.real(np.vdot(aq, aq)))
                gamma = complex(np.vdot(ap, aq))
                limit = tol * np.sqrt(alpha * beta)
                if abs(gamma) <= limit or limit == 0.0:
                    continue
                rotated = True
                phase = gamma / abs(gamma)
                tau = (beta - alpha) / (2.0 * abs(gamma))
                t = np.sign(tau) / (abs(tau) + np.hypot(1.0, tau)) if tau != 0.0 else 1.0
                c = 1.0 / np.hypot(1.0, t)
                s = c * t
                vq = np.conj(phase) * aq
                new_p = c * ap - s * vq
                a[:, q] = s * ap + c * vq
                a[:, p] = new_p
        if not rotated:
            break
    return np.sqrt(np.real(np.einsum("ij,ij->j", np.conj(a), a)))
