"""Built-in example pairs: sym:n, dih:n, cyc:n, full:n."""

from __future__ import annotations

import numpy as np

from . import gelfand, groups, kernels
from .gelfand import GelfandPair

BUILTIN_RANGES = {
    "sym": (2, 7),    # (S_n, S_{n-1}), K the stabilizer of the last point
    "dih": (3, 24),   # (D_n, <reflection>), K of order 2
    "cyc": (2, 256),  # (Z_n, {e})
    "full": (2, 6),   # (S_n, S_n)
}


def _cycle(n: int) -> list[int]:
    return [(i + 1) % n for i in range(n)]


def _transposition(n: int) -> list[int]:
    images = list(range(n))
    images[0], images[1] = 1, 0
    return images


def _reflection(n: int) -> list[int]:
    return [(-i) % n for i in range(n)]


def _symmetric_generators(n: int) -> list[list[int]]:
    if n == 1:
        return []
    if n == 2:
        return [_transposition(2)]
    return [_transposition(n), _cycle(n)]


def parse_builtin(name: str) -> tuple[str, int]:
    """Split and validate a builtin pair name of the form kind:n."""
    try:
        kind, raw = name.split(":", 1)
        n = int(raw)
    except ValueError as exc:
        raise ValueError(f"invalid builtin pair name {name!r}") from exc
    if kind not in BUILTIN_RANGES:
        raise ValueError(f"unknown builtin family {kind!r}; choose from {sorted(BUILTIN_RANGES)}")
    lo, hi = BUILTIN_RANGES[kind]
    if not lo <= n <= hi:
        raise ValueError(f"{kind}:n requires {lo} <= n <= {hi}, got {n}")
    return kind, n


def builtin_generators(name: str) -> tuple[int, list[list[int]], list[list[int]]]:
    """Degree, group generators, and subgroup generators of a builtin pair."""
    kind, n = parse_builtin(name)
    if kind == "sym":
        sub = _symmetric_generators(n - 1)
        sub = [images + [n - 1] for images in sub]  # embed S_{n-1} fixing the last point
        return n, _symmetric_generators(n), sub
    if kind == "dih":
        return n, [_cycle(n), _reflection(n)], [_reflection(n)]
    if kind == "cyc":
        return n, [_cycle(n)], []
    return n, _symmetric_generators(n), _symmetric_generators(n)


def make_pair(degree: int, group_generators, subgroup_generators,
              max_order: int | None = None) -> GelfandPair:
    """Certified pair from permutation generators of G and of K <= G."""
    group = groups.build_group(degree, group_generators, max_order=max_order)
    sub_indices = []
    for images in subgroup_generators:
        perm = np.asarray(list(images), dtype=np.int64)
        if perm.shape != (degree,) or not np.array_equal(np.sort(perm), np.arange(degree)):
            raise ValueError("invalid permutation")
        idx = kernels.find_rows(group.element_labels, perm.astype(np.int32)[None, :])[0]
        if idx < 0:
            raise ValueError("subgroup generator is not an element of the group")
        sub_indices.append(int(idx))
    subgroup = groups.subgroup_closure(group, sub_indices)
    return gelfand.gelfand_pair(group, subgroup)


def build_builtin(name: str, max_order: int | None = None) -> GelfandPair:
    """Certified pair for a builtin name such as 'sym:3'."""
    degree, ggens, sgens = builtin_generators(name)
    return make_pair(degree, ggens, sgens, max_order=max_order)
