"""Command-line front end.

Every subcommand is deterministic: the same invocation produces byte-for-byte
identical output.  Text mode prints human-readable lines; ``--format
structured`` prints one JSON document with fields {status, payload,
diagnostics}, serialized with sorted keys so that parse-and-redump
round-trips exactly.

Exit codes: 0 success / verification passed, 1 a verified identity failed
(an implementation bug, since the underlying facts are theorems), 2 usage
or input error, 3 resource cap exceeded.  The group-order cap can be raised
through the BURNSIDE_GROUP_CAP environment variable.
"""

from __future__ import annotations

import argparse
import json
import sys

from .engine import (
    CapExceeded,
    GroupFileError,
    disjoint_union,
    eq6_general,
    group_closure,
    lambda_general,
    natural_gset,
    parse_group_file,
    verify_lemma73,
    verify_lemma74,
)
from .marks import mark_matrix, marks_vector_order, verify_injectivity
from .partitions import enumerate_partitions, format_partition, parse_partition
from .schur import (
    basis_element,
    closed_lambda,
    degree,
    leading_term_check,
    recursive_lambda,
    schur_mul,
    sigma,
)


def cmd_lambda(args) -> tuple[int, list[str], dict]:
    if args.n < 1 or args.i < 0:
        raise ValueError(f"need n >= 1 and i >= 0, got n={args.n}, i={args.i}")
    if args.method == "closed":
        element = closed_lambda(args.i, args.n)
        return 0, [element.render()], {"method": "closed", "element": element.to_json()}
    if args.method == "recursive":
        element = recursive_lambda(args.i, args.n)
        return 0, [element.render()], {"method": "recursive", "element": element.to_json()}
    closed = closed_lambda(args.i, args.n)
    recursive = recursive_lambda(args.i, args.n)
    equal = closed == recursive
    lines = [
        f"closed:    {closed.render()}",
        f"recursive: {recursive.render()}",
        "EQUAL" if equal else "DIFFER",
    ]
    payload = {
        "method": "both",
        "closed": closed.to_json(),
        "recursive": recursive.to_json(),
        "equal": equal,
    }
    return (0 if equal else 1), lines, payload


def cmd_sigma(args) -> tuple[int, list[str], dict]:
    if args.n < 1 or args.i < 0:
        raise ValueError(f"need n >= 1 and i >= 0, got n={args.n}, i={args.i}")
    element = sigma(args.i, args.n)
    return 0, [element.render()], {"element": element.to_json()}


def cmd_mul(args) -> tuple[int, list[str], dict]:
    a = basis_element(parse_partition(args.a), args.n)
    b = basis_element(parse_partition(args.b), args.n)
    product = schur_mul(a, b)
    return 0, [product.render()], {"element": product.to_json()}


def cmd_marks(args) -> tuple[int, list[str], dict]:
    if args.n < 1:
        raise ValueError(f"need n >= 1, got n={args.n}")
    order = marks_vector_order(args.n)
    matrix = mark_matrix(args.n)
    labels = [format_partition(mu) for mu in order]
    col_widths = [
        max(len(labels[c]), max(len(str(row[c])) for row in matrix))
        for c in range(len(order))
    ]
    row_width = max(len(lab) for lab in labels)
    lines = [
        f"mark matrix @ n={args.n} (rows: cycle type, columns: block shape; descending lex)",
        " " * row_width
        + "  "
        + "  ".join(lab.rjust(col_widths[c]) for c, lab in enumerate(labels)),
    ]
    for r, row in enumerate(matrix):
        lines.append(
            labels[r].ljust(row_width)
            + "  "
            + "  ".join(str(v).rjust(col_widths[c]) for c, v in enumerate(row))
        )
    payload = {
        "n": args.n,
        "order": [list(mu) for mu in order],
        "matrix": matrix,
    }
    return 0, lines, payload


def cmd_verify(args) -> tuple[int, list[str], dict]:
    n_max = args.n_max
    if n_max < 1:
        raise ValueError(f"need n-max >= 1, got {n_max}")
    i_max = args.i_max if args.i_max is not None else n_max + 3

    equal_total = equal_pass = 0
    equal_failures = []
    for n in range(1, n_max + 1):
        for i in range(1, min(n, i_max) + 1):
            equal_total += 1
            if closed_lambda(i, n) == recursive_lambda(i, n):
                equal_pass += 1
            else:
                equal_failures.append({"i": i, "n": n})

    vanish_total = vanish_pass = 0
    vanish_failures = []
    for n in range(1, n_max + 1):
        for i in range(n + 1, i_max + 1):
            vanish_total += 1
            if recursive_lambda(i, n).is_zero() and closed_lambda(i, n).is_zero():
                vanish_pass += 1
            else:
                vanish_failures.append({"i": i, "n": n})

    tri_total = tri_pass = 0
    tri_failures = []
    for n in range(1, n_max + 1):
        tri_total += 1
        report = verify_injectivity(n)
        if report["triangular"] and report["diagonal_nonzero"]:
            tri_pass += 1
        else:
            tri_failures.append({"n": n, "failures": report["failures"]})

    leading: dict = {"checked": 0, "passed": 0, "failures": []}
    k = (n_max - 1) // 2
    if k >= 1:
        bound = n_max // 2
        keys = list(enumerate_partitions(n_max))
        for a in range(len(keys)):
            for b in range(a, len(keys)):
                if degree(keys[a], n_max, k) + degree(keys[b], n_max, k) > bound:
                    continue
                leading["checked"] += 1
                report = leading_term_check(keys[a], keys[b], n_max, k)
                if report["ok"]:
                    leading["passed"] += 1
                else:
                    leading["failures"].append(report)

    all_pass = (
        equal_pass == equal_total
        and vanish_pass == vanish_total
        and tri_pass == tri_total
        and leading["passed"] == leading["checked"]
    )
    verdict = "PASS" if all_pass else "FAIL"
    final = (
        f"{verdict}: {equal_pass}/{equal_total} lambda equalities, "
        f"{tri_pass}/{tri_total} mark matrices triangular"
    )
    lines = [
        f"lambda equalities (closed vs recursive), 1 <= i <= n <= {n_max}: "
        f"{equal_pass}/{equal_total}",
        f"vanishing above n (both constructions), n < i <= {i_max}: "
        f"{vanish_pass}/{vanish_total}",
        f"mark matrices lower-triangular with nonzero diagonal, n <= {n_max}: "
        f"{tri_pass}/{tri_total}",
    ]
    if k >= 1:
        lines.append(
            f"leading terms at n={n_max}, k={k}, degree sum <= {n_max // 2}: "
            f"{leading['passed']}/{leading['checked']}"
        )
    lines.append(final)
    payload = {
        "n_max": n_max,
        "i_max": i_max,
        "lambda_equalities": {
            "passed": equal_pass,
            "total": equal_total,
            "failures": equal_failures,
        },
        "vanishing": {
            "passed": vanish_pass,
            "total": vanish_total,
            "failures": vanish_failures,
        },
        "mark_matrices": {
            "passed": tri_pass,
            "total": tri_total,
            "failures": tri_failures,
        },
        "leading_terms": leading,
        "final": final,
    }
    return (0 if all_pass else 1), lines, payload


def cmd_oracle(args) -> tuple[int, list[str], dict]:
    try:
        with open(args.group, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ValueError(f"cannot read group file {args.group}: {exc}") from None
    generators, deg = parse_group_file(text)
    group = group_closure(generators, degree=deg)
    base = natural_gset(group)
    if args.action == "doubled":
        gset = disjoint_union(base, base)
    else:
        gset = base
    if args.i < 0:
        raise ValueError(f"need i >= 0, got {args.i}")
    by_formula = eq6_general(gset, args.i)
    by_recursion = lambda_general(gset, args.i)
    equal = by_formula == by_recursion
    lines = [
        f"group: degree {group.degree}, order {group.order}",
        f"action: {args.action} ({gset.size} points), i={args.i}",
        "closed signed sum:",
        by_formula.render(),
        "recursion:",
        by_recursion.render(),
        "EQUAL" if equal else "DIFFER",
    ]
    payload = {
        "group": {"degree": group.degree, "order": group.order},
        "action": args.action,
        "i": args.i,
        "closed_sum": by_formula.to_json(),
        "recursion": by_recursion.to_json(),
        "equal": equal,
    }
    return (0 if equal else 1), lines, payload


def cmd_indres(args) -> tuple[int, list[str], dict]:
    if not 1 <= args.i <= args.n:
        raise ValueError(f"need 1 <= i <= n, got i={args.i}, n={args.n}")
    lines = []
    reports74 = []
    ok = True
    for mu in enumerate_partitions(args.i):
        report = verify_lemma74(mu, args.i, args.n)
        reports74.append(report)
        ok = ok and report["isomorphic"]
        lines.append(
            f"block-tuple class {format_partition(mu)}: induced size "
            f"{report['size']} (expected {report['expected_size']}), "
            f"isomorphic: {'yes' if report['isomorphic'] else 'NO'}"
        )
    report73 = verify_lemma73(args.i, args.n)
    ok = ok and report73["pass"]
    lines.append(
        f"exterior power i={args.i} induced from n={args.i} to n={args.n}: "
        f"{'match' if report73['pass'] else 'MISMATCH'}"
    )
    lines.append("PASS" if ok else "FAIL")
    payload = {
        "i": args.i,
        "n": args.n,
        "block_tuple_classes": reports74,
        "exterior_power": report73,
        "pass": ok,
    }
    return (0 if ok else 1), lines, payload


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["text", "structured"],
        default="text",
        help="output mode: human-readable text or a JSON document",
    )
    parser = argparse.ArgumentParser(
        prog="burnside",
        description="Exact lambda-ring computations on Burnside rings of "
        "symmetric groups, with a brute-force oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "lambda", parents=[common], help="exterior-power class of {1..n}"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument(
        "--method", choices=["closed", "recursive", "both"], default="closed"
    )
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser(
        "sigma", parents=[common], help="symmetric-power class of {1..n}"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser(
        "mul", parents=[common], help="product of two basis classes"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", required=True, help="partition, e.g. [2,2]")
    p.add_argument("--b", required=True, help="partition, e.g. [2,2]")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser(
        "marks", parents=[common], help="mark matrix at ambient n"
    )
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_marks)

    p = sub.add_parser(
        "verify",
        parents=[common],
        help="verification sweep: lambda equalities, vanishing, mark "
        "triangularity, leading terms",
    )
    p.add_argument("--n-max", dest="n_max", type=int, default=8)
    p.add_argument(
        "--i-max",
        dest="i_max",
        type=int,
        default=None,
        help="largest power checked (default: n-max + 3)",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "oracle",
        parents=[common],
        help="compare the closed signed sum with the recursion over a "
        "user-supplied group",
    )
    p.add_argument("--group", required=True, help="group file (cycle notation)")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--action", choices=["natural", "doubled"], default="natural")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser(
        "indres",
        parents=[common],
        help="induction/restriction checks for block-tuple classes and the "
        "top exterior power",
    )
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_indres)

    return parser


def _emit(fmt: str, code: int, lines: list[str], payload: dict, diagnostics=None):
    if fmt == "structured":
        document = {
            "status": "ok" if code == 0 else "error",
            "payload": payload,
            "diagnostics": diagnostics or [],
        }
        print(json.dumps(document, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format
    try:
        code, lines, payload = args.func(args)
    except CapExceeded as exc:
        _emit(
            fmt,
            3,
            [f"cap exceeded: {exc}"],
            {"kind": "cap", "message": str(exc), "cap": exc.cap, "which": exc.kind},
        )
        return 3
    except GroupFileError as exc:
        _emit(fmt, 2, [f"group file error: {exc}"], {"kind": "usage", "message": str(exc)})
        return 2
    except ValueError as exc:
        _emit(fmt, 2, [f"error: {exc}"], {"kind": "usage", "message": str(exc)})
        return 2
    _emit(fmt, code, lines, payload)
    return code


if __name__ == "__main__":
    sys.exit(main())
