"""Singular values, Schatten norms, and operator norms of multiplier operators.

All norms live on the bi-invariant L^2 space, so singular values are computed
in the weighted inner product: the operator matrix is assembled in the
orthonormal spherical basis (rows phi_i / ||phi_i||) from the kernel
representation and factored by one-sided Jacobi, then cross-checked against
the analytic diagonal form |eigenvalue_i|.

Compactness of these operators is automatic (the bi-invariant space is
finite-dimensional), so it is recorded here as a note rather than checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import gelfand, kernels, transform
from .multiplier import MultiplierOperator, apply_kernel

DEFAULT_P_GRID = (1.0, 4.0 / 3.0, 2.0, 3.0, 4.0, math.inf)
DEFAULT_PQ_PAIRS = ((2.0, 2.0), (5.0 / 4.0, 5.0), (1.5, 3.0), (7.0 / 4.0, 7.0 / 3.0))


@dataclass(frozen=True, eq=False)
class SpectralReport:
    """Singular values and the norm family of one multiplier operator."""

    singular_values: np.ndarray
    schatten: dict          # p -> Schatten-p norm
    op_norm_2_2: float
    op_norm_1_inf: float
    sampled_norms: dict     # (p, q) -> {"value", "trials", "seed"}


def operator_matrix(op: MultiplierOperator) -> np.ndarray:
    """Matrix of T_m in the orthonormal spherical basis, via the kernel path."""
    table = op.table
    w = table.pair.coset_weights
    basis = table.values / np.sqrt(table.l2_norms_sq)[:, None]
    images = op.kernel @ (w[:, None] * basis.T)
    return (np.conj(basis) * w) @ images


def analytic_singular_values(op: MultiplierOperator) -> np.ndarray:
    """|eigenvalue_i| of the diagonal spectral form, descending."""
    return np.sort(np.abs(op.eigenvalues))[::-1]


def singular_values(op: MultiplierOperator, tol: float = 1e-9) -> np.ndarray:
    """Singular values by dense one-sided Jacobi, checked against the analytic path.

    Raises ValueError("spectral inconsistency") when the two routes disagree
    beyond ``tol`` - that signals an upstream bug, not a property failure.
    """
    dense = kernels.jacobi_singular_values(operator_matrix(op))
    analytic = analytic_singular_values(op)
    scale = max(1.0, float(analytic[0]) if analytic.size else 0.0)
    if np.abs(dense - analytic).max(initial=0.0) > tol * scale:
        raise ValueError("spectral inconsistency")
    return dense


def schatten_norm(op: MultiplierOperator, p: float) -> float:
    """l^p norm of the singular values; p = inf is the operator norm."""
    if p != math.inf and p < 1:
        raise ValueError("invalid exponent")
    sv = singular_values(op)
    if p == math.inf:
        return float(sv.max(initial=0.0))
    return float(np.sum(sv ** p) ** (1.0 / p))


def op_norm_2_2(op: MultiplierOperator) -> float:
    """Exact operator norm on bi-invariant L^2 (largest singular value)."""
    sv = analytic_singular_values(op)
    return float(sv[0]) if sv.size else 0.0


def op_norm_1_inf(op: MultiplierOperator) -> float:
    """Exact L^1 -> L^inf operator norm, max_{x,y} |k(x, y)|.

    The kernel is constant on double-coset blocks, so the representative
    matrix carries the maximum; normalized coset indicators (which are
    bi-invariant) attain it.
    """
    return float(np.abs(op.kernel).max(initial=0.0))


def trace(op: MultiplierOperator) -> complex:
    """Sum of eigenvalues, cross-checked against an orthonormal-basis sum.

    The independent route sums <T e_b, e_b> over the orthonormal basis of
    normalized coset indicators, which reduces to the kernel diagonal.
    """
    t_eig = complex(np.sum(op.eigenvalues))
    t_basis = complex(np.sum(op.table.pair.coset_weights * np.diag(op.kernel)))
    if abs(t_eig - t_basis) > 1e-10 * max(1.0, abs(t_eig)):
        raise ValueError("spectral inconsistency")
    return t_eig


def sampled_norm_lower_bound(op: MultiplierOperator, p: float, q: float,
                             trials: int = 64, seed: int = 0) -> float:
    """Lower bound on ||T_m||_{p -> q} from seeded random bi-invariant inputs.

    The trial set is `trials` complex Gaussian coordinate vectors (one per
    derived seed, order-independent) plus the coset indicators and every
    spherical function, so the (2, 2) bound is attained exactly.
    """
    table = op.table
    pair = table.pair
    s = table.num_functions
    candidates = [np.ones(s, dtype=np.complex128)]
    candidates.extend(np.eye(s, dtype=np.complex128))
    candidates.extend(table.values)
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        candidates.append(rng.standard_normal(s) + 1j * rng.standard_normal(s))
    best = 0.0
    for f in candidates:
        denom = gelfand.biinv_lp_norm(f, pair, p)
        if denom == 0.0:
            continue
        num = gelfand.biinv_lp_norm(apply_kernel(op, f), pair, q)
        best = max(best, num / denom)
    return best


def spectral_report(op: MultiplierOperator, p_grid=DEFAULT_P_GRID,
                    pq_pairs=DEFAULT_PQ_PAIRS, trials: int = 64,
                    seed: int = 0) -> SpectralReport:
    """Full norm family for one operator."""
    sv = singular_values(op)
    schatten = {float(p): (float(sv.max(initial=0.0)) if p == math.inf
                           else float(np.sum(sv ** p) ** (1.0 / p)))
                for p in p_grid}
    sampled = {}
    for p, q in pq_pairs:
        sampled[(float(p), float(q))] = {
            "value": sampled_norm_lower_bound(op, p, q, trials=trials, seed=seed),
            "trials": trials,
            "seed": seed,
        }
    return SpectralReport(
        singular_values=sv,
        schatten=schatten,
        op_norm_2_2=float(sv.max(initial=0.0)),
        op_norm_1_inf=op_norm_1_inf(op),
        sampled_norms=sampled,
    )
