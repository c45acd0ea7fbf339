"""Spherical Fourier transform, inversion, and Plancherel identities.

Two spectral measures on the set of spherical functions are first-class:
``plancherel`` weights coefficient i by mu_i = 1/||phi_i||^2, ``counting``
weights every coefficient by 1. Identities that are convention-sensitive take
the convention explicitly.
"""

from __future__ import annotations

import numpy as np

from . import gelfand
from .gelfand import SphericalTable

PLANCHEREL = "plancherel"
COUNTING = "counting"
CONVENTIONS = (PLANCHEREL, COUNTING)


def check_convention(convention: str) -> str:
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}, got {convention!r}")
    return convention


def spectral_weights(table: SphericalTable, convention: str) -> np.ndarray:
    """Mass of each spherical function under the chosen spectral measure."""
    check_convention(convention)
    if convention == PLANCHEREL:
        return table.weights
    return np.ones_like(table.weights)


def sft(coords, table: SphericalTable) -> np.ndarray:
    """Spherical Fourier transform  c_i = (1/|G|) sum_x f(x) phi_i(x^-1).

    Computed from the definition (via the inverse-coset map), not the
    inner-product shortcut, so rows that fail positive definiteness would
    still be transformed correctly.
    """
    pair = table.pair
    u = gelfand.as_coords(coords, pair)
    mat = table.values[:, pair.inverse_coset] * pair.coset_weights
    return mat @ u


def counting_coefficients(coords, table: SphericalTable) -> np.ndarray:
    """Inner products <f, phi_i>; equals sft(f) when every row is positive definite."""
    pair = table.pair
    u = gelfand.as_coords(coords, pair)
    return (np.conj(table.values) * pair.coset_weights) @ u


def inverse_sft(coeffs, table: SphericalTable) -> np.ndarray:
    """Inversion formula f(x) = sum_i mu_i c_i phi_i(x), on coset coordinates."""
    c = np.asarray(coeffs, dtype=np.complex128)
    if c.shape != (table.num_functions,):
        raise ValueError("domain mismatch")
    return (table.weights * c) @ table.values


def plancherel_pairing(f, g, table: SphericalTable) -> tuple[complex, complex]:
    """Both sides of <f^, g^>_{L^2(S+)} = <f, g>_{L^2} as a (lhs, rhs) pair."""
    fh = sft(f, table)
    gh = sft(g, table)
    lhs = complex(np.sum(table.weights * fh * np.conj(gh)))
    rhs = gelfand.biinv_inner(f, g, table.pair)
    return lhs, rhs


def spectral_lp_norm(coeffs, table: SphericalTable, p: float, convention: str) -> float:
    """L^p norm of a spectral vector under the chosen spectral measure."""
    check_convention(convention)
    c = np.asarray(coeffs, dtype=np.complex128)
    if p != np.inf and p < 1:
        raise ValueError("invalid exponent")
    mags = np.abs(c)
    if p == np.inf:
        return float(mags.max(initial=0.0))
    return float((spectral_weights(table, convention) @ mags ** p) ** (1.0 / p))
