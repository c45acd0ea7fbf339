"""File formats: group files, function files, multipliers, tables, reports.

Complex numbers are serialized as [re, im] pairs throughout.
"""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path

import numpy as np

from . import transform
from .gelfand import GelfandPair, SphericalTable
from .schatten import SpectralReport
from .verify import TheoremReport


def cvec_to_pairs(v) -> list:
    return [[float(z.real), float(z.imag)] for z in np.asarray(v, dtype=np.complex128)]


def pairs_to_cvec(payload) -> np.ndarray:
    try:
        return np.array([complex(float(re), float(im)) for re, im in payload],
                        dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise ValueError("expected a list of [re, im] pairs") from exc


def _read_json(path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot read JSON file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError(f"{path}: expected a JSON object")
    return data


def load_group_file(path) -> tuple[int, list, list]:
    """Read {degree, group_generators, subgroup_generators} from JSON."""
    data = _read_json(path)
    try:
        degree = int(data["degree"])
        ggens = list(data["group_generators"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"{path}: invalid group file: {exc}") from exc
    sgens = list(data.get("subgroup_generators", []))
    return degree, ggens, sgens


def load_function_file(path, pair: GelfandPair) -> tuple[str, np.ndarray]:
    """Read a function file; returns (basis, values).

    The "basis" field ("group" | "coset") disambiguates; when absent the
    vector length must match exactly one of |G| and the coset count.
    """
    data = _read_json(path)
    if "values" not in data:
        raise ValueError(f"{path}: function file needs a 'values' field")
    values = pairs_to_cvec(data["values"])
    basis = data.get("basis")
    n, s = pair.group.order, pair.num_cosets
    if basis is None:
        if len(values) == n and n != s:
            basis = "group"
        elif len(values) == s and n != s:
            basis = "coset"
        else:
            raise ValueError(f"{path}: ambiguous or mismatched length; add a 'basis' field")
    if basis not in ("group", "coset"):
        raise ValueError(f"{path}: basis must be 'group' or 'coset'")
    expected = n if basis == "group" else s
    if len(values) != expected:
        raise ValueError(f"{path}: expected {expected} values for basis {basis!r}")
    return basis, values


def function_to_dict(coords, basis: str = "coset") -> dict:
    return {"basis": basis, "values": cvec_to_pairs(coords)}


def load_multiplier_file(path, table: SphericalTable) -> tuple[str, np.ndarray]:
    """Read {convention, values}; values must match the spherical table size."""
    data = _read_json(path)
    convention = transform.check_convention(data.get("convention", transform.PLANCHEREL))
    if "values" not in data:
        raise ValueError(f"{path}: multiplier file needs a 'values' field")
    values = pairs_to_cvec(data["values"])
    if len(values) != table.num_functions:
        raise ValueError(
            f"{path}: multiplier length {len(values)} != {table.num_functions} spherical functions"
        )
    return convention, values


def multiplier_to_dict(convention: str, values) -> dict:
    return {"convention": transform.check_convention(convention),
            "values": cvec_to_pairs(values)}


def spectral_vector_to_dict(convention: str, coeffs) -> dict:
    return {"convention": transform.check_convention(convention),
            "coeffs": cvec_to_pairs(coeffs)}


def load_spectral_vector(path, table: SphericalTable) -> tuple[str, np.ndarray]:
    data = _read_json(path)
    convention = transform.check_convention(data.get("convention", transform.PLANCHEREL))
    if "coeffs" not in data:
        raise ValueError(f"{path}: spectral file needs a 'coeffs' field")
    coeffs = pairs_to_cvec(data["coeffs"])
    if len(coeffs) != table.num_functions:
        raise ValueError(f"{path}: expected {table.num_functions} coefficients")
    return convention, coeffs


def spherical_table_to_dict(table: SphericalTable) -> dict:
    pair = table.pair
    return {
        "order": int(pair.group.order),
        "subgroup_order": int(len(pair.subgroup_elements)),
        "num_double_cosets": int(pair.num_cosets),
        "coset_sizes": [int(x) for x in pair.coset_sizes],
        "coset_representatives": [int(x) for x in pair.representatives],
        "values": [cvec_to_pairs(row) for row in table.values],
        "l2_norms_sq": [float(x) for x in table.l2_norms_sq],
        "weights": [float(x) for x in table.weights],
        "positive_definite": [bool(x) for x in table.positive_definite],
        "residuals": [float(x) for x in table.residuals],
        "psd_mode": table.psd_mode,
    }


def spherical_table_to_csv(table: SphericalTable) -> str:
    """One row per spherical function: index, re/im interleaved values,
    squared norm, weight, positive-definite flag, residual."""
    s = table.num_functions
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["index"]
    for j in range(s):
        header += [f"re_{j}", f"im_{j}"]
    header += ["l2_norm_sq", "weight", "positive_definite", "residual"]
    writer.writerow(header)
    for i in range(s):
        row: list = [i]
        for j in range(s):
            row += [repr(float(table.values[i, j].real)),
                    repr(float(table.values[i, j].imag))]
        row += [repr(float(table.l2_norms_sq[i])), repr(float(table.weights[i])),
                int(table.positive_definite[i]), repr(float(table.residuals[i]))]
        writer.writerow(row)
    return buf.getvalue()


def _p_label(p: float) -> str:
    return "inf" if p == math.inf else repr(float(p))


def spectral_report_to_dict(report: SpectralReport) -> dict:
    return {
        "singular_values": [float(x) for x in report.singular_values],
        "schatten": {_p_label(p): float(v) for p, v in report.schatten.items()},
        "op_norm_2_2": float(report.op_norm_2_2),
        "op_norm_1_inf": float(report.op_norm_1_inf),
        "sampled_norms": {
            f"{_p_label(p)}->{_p_label(q)}": dict(info)
            for (p, q), info in report.sampled_norms.items()
        },
    }


def theorem_report_to_json(report: TheoremReport) -> str:
    """Canonical JSON; identical inputs yield byte-identical output."""
    return json.dumps(report.to_dict(), indent=2) + "\n"


def write_text(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")
