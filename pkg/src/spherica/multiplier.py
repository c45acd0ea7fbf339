"""Spherical Fourier multiplier operators T_m in both spectral conventions.

Under the plancherel convention T_m f = sum_i mu_i m_i f^_i phi_i (eigenvalue
m_i on phi_i); under the counting convention T_m f = sum_i m_i <f, phi_i>
phi_i (eigenvalue m_i ||phi_i||^2). Operators act on the bi-invariant
subspace only; project group functions explicitly before applying.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gelfand, transform
from .gelfand import SphericalTable


@dataclass(frozen=True, eq=False)
class MultiplierOperator:
    """Diagonal operator in the spherical basis with its kernel representation."""

    multiplier: np.ndarray   # (s,) complex symbol
    convention: str
    table: SphericalTable
    eigenvalues: np.ndarray  # (s,) action on each spherical function
    kernel: np.ndarray       # (s, s) kernel on double-coset representatives

    @property
    def size(self) -> int:
        return self.multiplier.shape[0]


def as_multiplier(values, table: SphericalTable) -> np.ndarray:
    m = np.asarray(values, dtype=np.complex128)
    if m.shape != (table.num_functions,):
        raise ValueError("multiplier length mismatch")
    if not np.all(np.isfinite(m)):
        raise ValueError("multiplier values must be finite")
    return m


def build_operator(m, table: SphericalTable, convention: str) -> MultiplierOperator:
    """Assemble T_m: eigenvalues per convention plus the representative kernel.

    The kernel is k(x, y) = sum_i w_i m_i phi_i(x) phi_i(y^-1) with w the
    spectral weights, so (T_m f)(x) = (1/|G|) sum_y k(x, y) f(y).
    """
    transform.check_convention(convention)
    mvec = as_multiplier(m, table)
    wgt = transform.spectral_weights(table, convention)
    if convention == transform.PLANCHEREL:
        eig = mvec.copy()
    else:
        eig = mvec * table.l2_norms_sq
    vals = table.values
    kernel = (vals * (wgt * mvec)[:, None]).T @ vals[:, table.pair.inverse_coset]
    return MultiplierOperator(
        multiplier=mvec,
        convention=convention,
        table=table,
        eigenvalues=eig,
        kernel=kernel,
    )


def apply_kernel(op: MultiplierOperator, coords) -> np.ndarray:
    """Kernel-form application (T_m f)(x) = (1/|G|) sum_y k(x, y) f(y)."""
    u = gelfand.as_coords(coords, op.table.pair)
    return op.kernel @ (op.table.pair.coset_weights * u)


def apply_operator(op: MultiplierOperator, coords) -> np.ndarray:
    """Spectral-form application, cross-checked against the kernel form."""
    table = op.table
    u = gelfand.as_coords(coords, table.pair)
    if op.convention == transform.PLANCHEREL:
        coeffs = transform.sft(u, table)
        out = (table.weights * op.multiplier * coeffs) @ table.values
    else:
        coeffs = transform.counting_coefficients(u, table)
        out = (op.multiplier * coeffs) @ table.values
    other = apply_kernel(op, u)
    scale = max(1.0, float(np.abs(out).max(initial=0.0)), float(np.abs(u).max(initial=0.0)))
    if np.abs(out - other).max(initial=0.0) > 1e-10 * scale:
        raise ValueError("spectral inconsistency: kernel and spectral application disagree")
    return out


def diagonal_identity_defect(op: MultiplierOperator, coords, corrected: bool = True) -> float:
    """Defect of the transform-side identity F(T_m f) = m f^.

    Under the counting convention the identity needs the ||phi||^2 correction
    (eigenvalues are m_i ||phi_i||^2, not m_i); ``corrected=False`` reports
    the defect of the uncorrected identity instead.
    """
    table = op.table
    u = gelfand.as_coords(coords, table.pair)
    lhs = transform.sft(apply_operator(op, u), table)
    fh = transform.sft(u, table)
    if op.convention == transform.PLANCHEREL or not corrected:
        target = op.multiplier * fh
    else:
        target = op.multiplier * table.l2_norms_sq * fh
    return float(np.abs(lhs - target).max(initial=0.0))


def adjoint(op: MultiplierOperator) -> MultiplierOperator:
    """Hilbert adjoint on the bi-invariant L^2 space: T_m* = T_{conj(m)}."""
    return build_operator(np.conj(op.multiplier), op.table, op.convention)


def composition_defects(m1, m2, f, g, table: SphericalTable,
                        convention: str) -> tuple[float, float]:
    """Defects of the two convolution identities for multiplier operators.

    d1 = ||T_{m1}(f*g) - (T_{m1}f)*g||_inf holds in both conventions;
    d2 = ||T_{m1}f * T_{m2}g - T_{m1 m2}(f*g)||_inf is guaranteed only under
    the plancherel convention.
    """
    pair = table.pair
    op1 = build_operator(m1, table, convention)
    op2 = build_operator(m2, table, convention)
    op12 = build_operator(as_multiplier(m1, table) * as_multiplier(m2, table), table, convention)
    fg = gelfand.conv_coords(f, g, pair)
    d1 = float(np.abs(
        apply_operator(op1, fg) - gelfand.conv_coords(apply_operator(op1, f), g, pair)
    ).max(initial=0.0))
    d2 = float(np.abs(
        gelfand.conv_coords(apply_operator(op1, f), apply_operator(op2, g), pair)
        - apply_operator(op12, fg)
    ).max(initial=0.0))
    return d1, d2
