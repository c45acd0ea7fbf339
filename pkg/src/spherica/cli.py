"""Command-line interface: check, spherical, transform, apply, schatten, verify.

Exit codes: 0 success, 1 mathematical failure (non-Gelfand pair or a failed
check), 2 input error (unreadable file, bad format, dimension mismatch).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import builtin_pairs, gelfand, multiplier as mult, schatten, serialization, transform, verify
from .gelfand import GelfandPair

EXIT_OK = 0
EXIT_MATH = 1
EXIT_INPUT = 2


def _load_pair(args) -> tuple[GelfandPair, str | None]:
    if bool(args.pair_file) == bool(args.builtin):
        raise ValueError("provide exactly one pair source: a group file or --builtin")
    if args.builtin:
        return builtin_pairs.build_builtin(args.builtin), args.builtin
    degree, ggens, sgens = serialization.load_group_file(args.pair_file)
    return builtin_pairs.make_pair(degree, ggens, sgens), None


def _emit(text: str, out_path) -> None:
    if out_path:
        serialization.write_text(out_path, text)
    else:
        sys.stdout.write(text)


def _table(pair: GelfandPair, seed: int):
    if pair.commutative is not True:
        raise _NotGelfand()
    return gelfand.compute_spherical_functions(pair, seed=seed)


class _NotGelfand(Exception):
    pass


def cmd_check(args) -> int:
    pair, _ = _load_pair(args)
    commutes, defect = gelfand.is_gelfand_pair(pair)
    payload = {
        "order": int(pair.group.order),
        "subgroup_order": int(len(pair.subgroup_elements)),
        "num_double_cosets": int(pair.num_cosets),
        "gelfand": bool(commutes),
        "defect": float(defect),
    }
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return EXIT_OK if commutes else EXIT_MATH


def cmd_spherical(args) -> int:
    pair, _ = _load_pair(args)
    table = _table(pair, args.seed)
    if args.format == "csv":
        _emit(serialization.spherical_table_to_csv(table), args.out)
    else:
        _emit(json.dumps(serialization.spherical_table_to_dict(table), indent=2) + "\n",
              args.out)
    return EXIT_OK


def cmd_transform(args) -> int:
    pair, _ = _load_pair(args)
    table = _table(pair, args.seed)
    convention = transform.check_convention(args.convention)
    if args.inverse:
        _, coeffs = serialization.load_spectral_vector(args.function_file, table)
        coords = transform.inverse_sft(coeffs, table)
        payload = serialization.function_to_dict(coords)
    else:
        basis, values = serialization.load_function_file(args.function_file, pair)
        coords = gelfand.project_biinvariant(values, pair) if basis == "group" else values
        coeffs = transform.sft(coords, table)
        payload = serialization.spectral_vector_to_dict(convention, coeffs)
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_apply(args) -> int:
    pair, _ = _load_pair(args)
    table = _table(pair, args.seed)
    convention, mvec = serialization.load_multiplier_file(args.multiplier_file, table)
    basis, values = serialization.load_function_file(args.function_file, pair)
    coords = gelfand.project_biinvariant(values, pair) if basis == "group" else values
    op = mult.build_operator(mvec, table, convention)
    result = mult.apply_operator(op, coords)
    _emit(json.dumps(serialization.function_to_dict(result), indent=2) + "\n", args.out)
    return EXIT_OK


def _parse_p(token: str) -> float:
    token = token.strip()
    if token in ("inf", "oo"):
        return math.inf
    if "/" in token:
        num, den = token.split("/", 1)
        return float(num) / float(den)
    return float(token)


def cmd_schatten(args) -> int:
    pair, _ = _load_pair(args)
    table = _table(pair, args.seed)
    convention, mvec = serialization.load_multiplier_file(args.multiplier_file, table)
    if args.convention:
        convention = transform.check_convention(args.convention)
    p_grid = tuple(_parse_p(tok) for tok in args.p_grid.split(","))
    if any(p != math.inf and p < 1 for p in p_grid):
        raise ValueError("invalid exponent")
    op = mult.build_operator(mvec, table, convention)
    report = schatten.spectral_report(op, p_grid=p_grid, trials=args.trials, seed=args.seed)
    payload = serialization.spectral_report_to_dict(report)
    payload["convention"] = convention
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    pair, label = _load_pair(args)
    table = _table(pair, args.seed)
    report = verify.run_suite(pair, table, trials=args.trials, seed=args.seed,
                              tol=args.tol, label=label)
    text = serialization.theorem_report_to_json(report)
    if args.out:
        serialization.write_text(args.out, text)
    for rec in report.checks:
        sys.stdout.write(
            f"{rec['id']:>4} {rec['theorem']:<32} mode={rec['mode']:<10} "
            f"worst={rec['worst']!r} pass={rec['pass']}\n"
        )
    ok = report.passed()
    sys.stdout.write(("PASS" if ok else "FAIL") + "\n")
    if not args.out:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_MATH


def _add_pair_arguments(sub) -> None:
    sub.add_argument("pair_file", nargs="?", default=None,
                     help="group file JSON: {degree, group_generators, subgroup_generators}")
    sub.add_argument("--builtin", default=None,
                     help="builtin pair name: sym:n, dih:n, cyc:n, or full:n")
    sub.add_argument("--seed", type=int, default=0, help="seed (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spherica",
        description="Spherical functions, transforms, multiplier operators, and "
                    "theorem verification on finite Gelfand pairs.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("check", help="certify that a pair is a Gelfand pair")
    _add_pair_arguments(p)
    p.set_defaults(func=cmd_check)

    p = subs.add_parser("spherical", help="compute the spherical function table")
    _add_pair_arguments(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_spherical)

    p = subs.add_parser("transform", help="spherical Fourier transform of a function file")
    _add_pair_arguments(p)
    p.add_argument("function_file")
    p.add_argument("--convention", choices=transform.CONVENTIONS, default=transform.PLANCHEREL)
    p.add_argument("--inverse", action="store_true",
                   help="treat the input as a spectral vector and invert")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_transform)

    p = subs.add_parser("apply", help="apply a multiplier operator to a function file")
    _add_pair_arguments(p)
    p.add_argument("multiplier_file")
    p.add_argument("function_file")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_apply)

    p = subs.add_parser("schatten", help="singular values and norm family of T_m")
    _add_pair_arguments(p)
    p.add_argument("multiplier_file")
    p.add_argument("--convention", choices=transform.CONVENTIONS, default=None,
                   help="override the convention recorded in the multiplier file")
    p.add_argument("--p-grid", default="1,4/3,2,3,4,inf")
    p.add_argument("--trials", type=int, default=64)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_schatten)

    p = subs.add_parser("verify", help="run the full theorem suite against a pair")
    _add_pair_arguments(p)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--out", default=None, help="write the report JSON here")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _NotGelfand:
        sys.stderr.write("error: not a Gelfand pair\n")
        return EXIT_MATH
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
