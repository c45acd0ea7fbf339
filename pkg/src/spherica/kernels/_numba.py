"""Numba @njit kernel implementations (default backend)."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _bisect_row(sorted_rows, query, qi):
    """Index of query row qi in lexicographically sorted rows, or -1."""
    lo = 0
    hi = sorted_rows.shape[0]
    d = sorted_rows.shape[1]
    while lo < hi:
        mid = (lo + hi) // 2
        cmp = 0
        for t in range(d):
            x = sorted_rows[mid, t]
            y = query[qi, t]
            if x < y:
                cmp = -1
                break
            if x > y:
                cmp = 1
                break
        if cmp < 0:
            lo = mid + 1
        else:
            hi = mid
    if lo < sorted_rows.shape[0]:
        for t in range(d):
            if sorted_rows[lo, t] != query[qi, t]:
                return -1
        return lo
    return -1


@njit(cache=True)
def find_rows_core(sorted_rows, order, queries):
    m = queries.shape[0]
    out = np.empty(m, dtype=np.int64)
    for qi in range(m):
        pos = _bisect_row(sorted_rows, queries, qi)
        out[qi] = order[pos] if pos >= 0 else -1
    return out


@njit(cache=True)
def cayley_core(elems, sorted_rows, order):
    n = elems.shape[0]
    d = elems.shape[1]
    mul = np.empty((n, n), dtype=np.int32)
    prod = np.empty((1, d), dtype=np.int32)
    for a in range(n):
        for b in range(n):
            for i in range(d):
                prod[0, i] = elems[a, elems[b, i]]
            pos = _bisect_row(sorted_rows, prod, 0)
            if pos < 0:
                raise ValueError("product of elements not found: set is not closed")
            mul[a, b] = np.int32(order[pos])
    return mul


@njit(cache=True)
def convolve_core(f, g, mul, inv):
    n = f.shape[0]
    out = np.empty(n, dtype=np.complex128)
    for x in range(n):
        acc = 0.0 + 0.0j
        for y in range(n):
            acc += f[y] * g[mul[inv[y], x]]
        out[x] = acc / n
    return out


@njit(cache=True)
def coset_counts_core(mul, inv, coset_of, reps):
    n = mul.shape[0]
    s = reps.shape[0]
    counts = np.zeros((s, s, s), dtype=np.int64)
    for y in range(n):
        i = coset_of[y]
        yi = inv[y]
        for k in range(s):
            j = coset_of[mul[yi, reps[k]]]
            counts[i, j, k] += 1
    return counts


@njit(cache=True)
def jacobi_core(a, tol, max_sweeps):
    nrows = a.shape[0]
    ncols = a.shape[1]
    for _ in range(max_sweeps):
        rotated = False
        for p in range(ncols - 1):
            for q in range(p + 1, ncols):
                alpha = 0.0
                beta = 0.0
                gamma = 0.0 + 0.0j
                for i in range(nrows):
                    ap = a[i, p]
                    aq = a[i, q]
                    alpha += ap.real * ap.real + ap.imag * ap.imag
                    beta += aq.real * aq.real + aq.imag * aq.imag
                    gamma += np.conj(ap) * aq
                absg = abs(gamma)
                limit = tol * np.sqrt(alpha * beta)
                if absg <= limit or limit == 0.0:
                    continue
                rotated = True
                phase = gamma / absg
                tau = (beta - alpha) / (2.0 * absg)
                if tau == 0.0:
                    t = 1.0
                else:
                    t = np.sign(tau) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, t)
                s = c * t
                pconj = np.conj(phase)
                for i in range(nrows):
                    ap = a[i, p]
                    vq = pconj * a[i, q]
                    a[i, p] = c * ap - s * vq
                    a[i, q] = s * ap + c * vq
        if not rotated:
            break
    sv = np.empty(ncols, dtype=np.float64)
    for j in range(ncols):
        acc = 0.0
        for i in range(nrows):
            acc += a[i, j].real * a[i, j].real + a[i, j].imag * a[i, j].imag
        sv[j] = np.sqrt(acc)
    return sv
