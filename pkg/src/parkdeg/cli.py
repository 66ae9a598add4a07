"""Command-line access to the counting engines and cross-checks.

Exit codes: 0 success, 1 domain error (bad input, with a one-line
diagnostic on stderr), 2 internal inconsistency (independent engines
disagreeing, or a bijection misbehaving).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from . import compositions as comp
from . import genfun, multidegree, parking
from .coefficients import asym_multinomial, odd_double_factorial
from .errors import (
    DuplicateError,
    InconsistencyError,
    InvariantError,
    ShapeError,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse would sys.exit(2); report usage problems as domain errors
    def error(self, message):
        raise _UsageError(message)


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip() != "")
    except ValueError:
        raise _UsageError(f"expected a comma-separated integer list, got {text!r}")


def _check_redundant_n(declared, inferred: int) -> int:
    if declared is not None and declared != inferred:
        raise ShapeError(f"--n {declared} contradicts inferred size {inferred}")
    return inferred


def _load_pf_file(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _cmd_multidegree(args) -> int:
    table = multidegree.compute_table(args.n)
    cone = multidegree.cone_degree(args.n)
    if args.format == "json":
        print(table.to_json())
    elif args.format == "csv":
        print(table.to_csv(), end="")
    else:
        m = args.n - 3
        print(f"multidegree table for n={args.n} ({len(table.entries)} indices)")
        for k, deg in table.entries.items():
            print(f"k={k}  deg={deg}")
        print(f"cone degree = {cone}, (2*{m}-1)!! = {odd_double_factorial(m)}: OK")
    return 0


def _cmd_coeff(args) -> int:
    k = _ints(args.k)
    n = _check_redundant_n(args.n, sum(k))
    print(asym_multinomial(n, k))
    return 0


def _cmd_cone_degree(args) -> int:
    value = multidegree.cone_degree(args.n)
    m = args.n - 3
    print(f"cone degree of the n={args.n} embedding: {value}")
    print(f"check against (2*{m}-1)!! = {odd_double_factorial(m)}: PASS")
    return 0


def _cmd_cpf(args) -> int:
    if args.cpf_command == "count":
        if args.heights is not None:
            k = _ints(args.heights)
            _check_redundant_n(args.n, len(k))
            print(parking.count_cpf(len(k), k))
        elif args.n is not None:
            print(parking.count_cpf_total(args.n))
        else:
            raise _UsageError("cpf count needs --heights or --n")
        return 0
    if args.cpf_command == "enumerate":
        k = _ints(args.heights)
        _check_redundant_n(args.n, len(k))
        first = True
        for pf in parking.enumerate_cpf(len(k), k):
            if args.render:
                if not first:
                    print()
                print(pf.render())
            else:
                print(pf.to_json())
            first = False
        return 0
    if args.cpf_command == "classify":
        pf = parking.ParkingFunction.from_json_dict(_load_pf_file(args.file))
        print(parking.classify(pf))
        return 0
    raise _UsageError("cpf needs a subcommand: count, enumerate, or classify")


def _cmd_insert(args) -> int:
    data = _load_pf_file(args.file)
    pf = parking.ParkingFunction.from_json_dict(data)
    point = args.point
    if point is None:
        point = data.get("point")
        if point is None:
            raise _UsageError("no --point given and the file carries none")
    elif "point" in data and data["point"] != point:
        raise ShapeError(f"--point {point} contradicts file point {data['point']}")
    pointed = parking.PointedParkingFunction(pf, point)
    insert = (
        parking.insert_iota if args.algorithm == "iota" else parking.insert_iota_prime
    )
    print(insert(pointed).to_json())
    return 0


def _cmd_remove(args) -> int:
    pf = parking.ParkingFunction.from_json_dict(_load_pf_file(args.file))
    remove = parking.remove_nu if args.algorithm == "nu" else parking.remove_nu_prime
    pointed = remove(pf)
    print(json.dumps(pointed.to_json_dict(), sort_keys=True))
    return 0


def _cmd_genfun(args) -> int:
    poly = genfun.f_n(args.n)
    if args.eval is not None:
        values = _ints(args.eval)
        if len(values) != args.n:
            raise ShapeError(f"--eval needs {args.n} values, got {len(values)}")
        print(poly.evaluate(values))
    else:
        print(poly)
    return 0


# Ceilings keeping each exhaustive sweep desk-scale; --max-n is clamped.
_SUITE_CAPS = {"recursion": 10, "enumeration": 8, "bijection": 6, "genfun": 7}


def _suite_recursion(max_n: int) -> list[str]:
    problems = []
    for m in range(1, max_n + 1):
        total = 0
        for k in comp.enumerate_compositions(m, m):
            value = asym_multinomial(m, k)
            total += value
            if (value != 0) != comp.is_catalan(k):
                problems.append(f"support mismatch at m={m}, k={k}")
        if total != odd_double_factorial(m):
            problems.append(f"row sum {total} != (2*{m}-1)!! at m={m}")
        if asym_multinomial(m, (1,) * m) != math.factorial(m):
            problems.append(f"diagonal != {m}! at m={m}")
    return problems


def _suite_enumeration(max_n: int) -> list[str]:
    problems = []
    for m in range(1, max_n + 1):
        for k in comp.enumerate_compositions(m, m):
            if parking.count_cpf(m, k) != asym_multinomial(m, k):
                problems.append(f"recursion/enumeration mismatch at m={m}, k={k}")
    return problems


def _suite_bijection(max_n: int) -> list[str]:
    problems = []
    pairs = (
        (parking.insert_iota, parking.remove_nu, "iota"),
        (parking.insert_iota_prime, parking.remove_nu_prime, "iota-prime"),
    )
    for m in range(2, max_n + 1):
        catalan = [
            k for k in comp.enumerate_compositions(m, m) if comp.is_catalan(k)
        ]
        expected = {pf for k in catalan for pf in parking.enumerate_cpf(m, k)}
        for insert, remove, name in pairs:
            built = parking.build_all_by_insertion(m, name)
            if built != expected:
                problems.append(f"{name} image != enumeration at size {m}")
            for q in expected:
                pointed = remove(q)
                if insert(pointed) != q:
                    problems.append(f"{name} round trip failed at {q!r}")
                if parking.is_good_pointed(pointed) != parking.is_good(q):
                    problems.append(f"{name} good/bad flip at {q!r}")
    return problems


def _suite_genfun(max_n: int) -> list[str]:
    problems = []
    for m in range(1, max_n + 1):
        poly = genfun.f_n(m)  # raises InconsistencyError if the two forms differ
        if poly.evaluate((1,) * m) != odd_double_factorial(m):
            problems.append(f"f_{m}(1,..,1) != (2*{m}-1)!!")
        for k in comp.enumerate_compositions(m, m):
            if poly.coefficient(k) != asym_multinomial(m, k):
                problems.append(f"coefficient mismatch at m={m}, k={k}")
    return problems


_SUITES = {
    "recursion": _suite_recursion,
    "enumeration": _suite_enumeration,
    "bijection": _suite_bijection,
    "genfun": _suite_genfun,
}


def _cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        bound = min(args.max_n, _SUITE_CAPS[name])
        note = f" (capped from {args.max_n})" if bound < args.max_n else ""
        try:
            problems = _SUITES[name](bound)
        except (InconsistencyError, DuplicateError, InvariantError, AssertionError) as exc:
            problems = [str(exc)]
        if problems:
            failed = True
            print(f"suite {name}: FAIL up to n={bound}{note}: {problems[0]}")
        else:
            print(f"suite {name}: PASS up to n={bound}{note}")
    return 2 if failed else 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="parkdeg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("multidegree", help="full degree table and cone degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=_cmd_multidegree)

    p = sub.add_parser("coeff", help="asymmetric multinomial of a composition")
    p.add_argument("--k", required=True, help="comma-separated parts")
    p.add_argument("--n", type=int, help="redundant size; must match sum(k)")
    p.set_defaults(func=_cmd_coeff)

    p = sub.add_parser("cone-degree", help="table sum with double-factorial check")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_cone_degree)

    p = sub.add_parser("cpf", help="column-restricted parking functions")
    cpf_sub = p.add_subparsers(dest="cpf_command", required=True)
    q = cpf_sub.add_parser("count")
    q.add_argument("--n", type=int)
    q.add_argument("--heights", help="comma-separated column heights")
    q.set_defaults(func=_cmd_cpf)
    q = cpf_sub.add_parser("enumerate")
    q.add_argument("--heights", required=True)
    q.add_argument("--n", type=int)
    q.add_argument("--render", action="store_true")
    q.set_defaults(func=_cmd_cpf)
    q = cpf_sub.add_parser("classify")
    q.add_argument("--file", required=True)
    q.set_defaults(func=_cmd_cpf)

    p = sub.add_parser("insert", help="insert the next label at a path point")
    p.add_argument("--algorithm", choices=("iota", "iota-prime"), required=True)
    p.add_argument("--file", required=True)
    p.add_argument("--point", type=int)
    p.set_defaults(func=_cmd_insert)

    p = sub.add_parser("remove", help="remove the top label, recording the point")
    p.add_argument("--algorithm", choices=("nu", "nu-prime"), required=True)
    p.add_argument("--file", required=True)
    p.set_defaults(func=_cmd_remove)

    p = sub.add_parser("genfun", help="generating function of the coefficients")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eval", help="comma-separated values to evaluate at")
    p.set_defaults(func=_cmd_genfun)

    p = sub.add_parser("verify", help="cross-engine consistency suites")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument(
        "--suite",
        choices=("recursion", "enumeration", "bijection", "genfun", "all"),
        default="all",
    )
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv: Sequence[str]) -> int:
    """Parse and execute one invocation; returns the exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
        return args.func(args)
    except (InconsistencyError, DuplicateError, InvariantError) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 2
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, IndexError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
