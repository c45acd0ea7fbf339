"""Finite permutation groups, normalized Haar measure, L^p norms, convolution.

Conventions used throughout the package:

* elements are indices 0..order-1 with the identity at index 0;
* the Haar measure is normalized counting measure (weight 1/|G| per element);
* a function on the group is a complex vector of length ``order``.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels

DEFAULT_MAX_ORDER = 10_000
ASSOCIATIVITY_CAP = 512


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Enumerated finite group with full multiplication and inverse tables."""

    order: int
    identity: int
    mul: np.ndarray             # (order, order) int32, mul[a, b] = index of a o b
    inv: np.ndarray             # (order,) int32
    element_labels: np.ndarray  # (order, degree) int32 permutation images
    degree: int

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"FiniteGroup(order={self.order}, degree={self.degree})"


def _order_cap(max_order: int | None) -> int:
    if max_order is not None:
        return int(max_order)
    env = os.environ.get("SPHERICA_MAX_ORDER")
    return int(env) if env else DEFAULT_MAX_ORDER


def build_group(degree: int, generators: Iterable[Sequence[int]],
                max_order: int | None = None) -> FiniteGroup:
    """Close a set of permutations (image arrays on 0..degree-1) under composition.

    Elements are ordered by breadth-first discovery, identity first, so the
    enumeration is reproducible. Raises ValueError("invalid permutation") for
    a non-bijective generator and ValueError("group too large") when the
    closure exceeds the order cap (default 10000, overridable via the
    SPHERICA_MAX_ORDER environment variable or the ``max_order`` argument).
    """
    degree = int(degree)
    if degree < 1:
        raise ValueError("degree must be a positive integer")
    cap = _order_cap(max_order)

    identity = np.arange(degree, dtype=np.int32)
    gens: list[np.ndarray] = []
    for g in generators:
        arr = np.asarray(list(g), dtype=np.int64)
        if arr.shape != (degree,) or not np.array_equal(np.sort(arr), np.arange(degree)):
            raise ValueError("invalid permutation")
        gens.append(arr.astype(np.int32))

    elems = [identity]
    index = {identity.tobytes(): 0}
    head = 0
    while head < len(elems):
        base = elems[head]
        head += 1
        for g in gens:
            prod = base[g]
            key = prod.tobytes()
            if key not in index:
                if len(elems) >= cap:
                    raise ValueError("group too large")
                index[key] = len(elems)
                elems.append(prod)

    table = np.array(elems, dtype=np.int32)
    mul = kernels.cayley_table(table)
    inv_images = np.argsort(table, axis=1).astype(np.int32)
    inv = kernels.find_rows(table, inv_images)
    if np.any(inv < 0):
        raise ValueError("inverse of an element not found: set is not closed")

    group = FiniteGroup(
        order=len(elems),
        identity=0,
        mul=mul,
        inv=inv.astype(np.int32),
        element_labels=table,
        degree=degree,
    )
    _validate_tables(group)
    return group


def _validate_tables(group: FiniteGroup, assoc_cap: int = ASSOCIATIVITY_CAP) -> None:
    """Check the identity, inverse, and associativity invariants of the tables.

    Associativity is exhaustive up to ``assoc_cap`` elements and spot-checked
    on 10*order random triples above it (the O(n^3) full check gets costly).
    """
    n = group.order
    mul = group.mul
    idx = np.arange(n)
    if not (np.array_equal(mul[0, :], idx) and np.array_equal(mul[:, 0], idx)):
        raise ValueError("identity row/column of the multiplication table is wrong")
    if not np.all(mul[idx, group.inv] == group.identity):
        raise ValueError("inverse table is wrong")
    if n <= assoc_cap:
        for a in range(n):
            if not np.array_equal(mul[mul[a, :], :], mul[a, mul]):
                raise ValueError("multiplication table is not associative")
    else:
        rng = np.random.default_rng(n)
        a, b, c = rng.integers(0, n, size=(3, 10 * n))
        if not np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]]):
            raise ValueError("multiplication table is not associative")


def subgroup_closure(group: FiniteGroup, generator_indices: Iterable[int]) -> np.ndarray:
    """Sorted element indices of the subgroup generated by the given elements."""
    seen = {group.identity}
    frontier = [group.identity]
    gens = [int(g) for g in generator_indices]
    for g in gens:
        if g < 0 or g >= group.order:
            raise ValueError("generator index out of range")
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = int(group.mul[x, g])
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return np.array(sorted(seen), dtype=np.int64)


def as_function(values, group: FiniteGroup) -> np.ndarray:
    """Validate and coerce a vector to a complex function on the group."""
    f = np.asarray(values, dtype=np.complex128)
    if f.shape != (group.order,):
        raise ValueError("domain mismatch")
    if not np.all(np.isfinite(f)):
        raise ValueError("function values must be finite")
    return f


def lp_norm(values, p: float) -> float:
    """L^p norm under normalized counting measure; p = inf gives the max norm."""
    f = np.asarray(values, dtype=np.complex128)
    if not np.all(np.isfinite(f)):
        raise ValueError("function values must be finite")
    if p != math.inf and p < 1:
        raise ValueError("invalid exponent")
    mags = np.abs(f)
    if p == math.inf:
        return float(mags.max(initial=0.0))
    return float(np.mean(mags ** p) ** (1.0 / p))


def convolve(f, g, group: FiniteGroup) -> np.ndarray:
    """(f * g)(x) = (1/|G|) sum_y f(y) g(y^-1 x)."""
    fv = as_function(f, group)
    gv = as_function(g, group)
    return kernels.convolve_table(fv, gv, group.mul, group.inv)


def involution(f, group: FiniteGroup) -> np.ndarray:
    """x -> conj(f(x^-1))."""
    fv = as_function(f, group)
    return np.conj(fv[group.inv])
