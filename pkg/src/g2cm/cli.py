"""Command-line front end with deterministic JSON reports.

Subcommands: field, analyze, charpoly, lemma2, oracle, scan.  Every
report is a single envelope {command, inputs, results, status[, error]}
with fixed key order; big integers are emitted as decimal strings so
consumers never overflow.  Exit codes: 0 success, 1 a checked property
failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .cm_field import FrobeniusElement, validate_field
from .errors import G2CMError
from .frobenius import char_poly_closed, char_poly_product, group_order, weil_validate
from .oracle import (
    DEFAULT_BUDGET,
    GenusTwoCurve,
    char_poly_from_counts,
    count_points,
    enumerate_jacobian,
    poly_derivative,
    poly_gcd,
)
from .sylow import analyze, verify_lemma2

EXIT_OK = 0
EXIT_PROPERTY_VIOLATION = 1
EXIT_INPUT_ERROR = 2


def _s(n: int) -> str:
    return str(int(n))


def _poly_payload(P) -> dict:
    return {
        "coeffs_low_first": [_s(c) for c in P.coeffs],
        "p": _s(P.p),
        "display": str(P),
    }


def _budget() -> int:
    raw = os.environ.get("CM2_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def _parse_c(raw: str) -> tuple[int, int, int, int]:
    parts = [int(t) for t in raw.split(",")]
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(
            f"-c expects four comma-separated integers, got {raw!r}"
        )
    return tuple(parts)  # type: ignore[return-value]


def _parse_coeffs(raw: str) -> tuple[int, ...]:
    return tuple(int(t) for t in raw.split(","))


def cmd_field(args) -> tuple[dict, int]:
    field = validate_field(args.D, args.a, args.b)
    P, Q = field.min_poly_coeffs()
    return {
        "galois_type": field.galois_type.value,
        "primitive": field.primitive(),
        "min_poly": {"P": _s(P), "Q": _s(Q), "display": f"X^4{P:+d}X^2{Q:+d}"},
    }, EXIT_OK


def cmd_analyze(args) -> tuple[dict, int]:
    field = validate_field(args.D, args.a, args.b)
    c1, c2, c3, c4 = args.c
    w = FrobeniusElement(c1=c1, c2=c2, c3=c3, c4=c4, field=field)
    verdict = analyze(field, w)
    closed = char_poly_closed(verdict.p, c1, c2, args.D)
    product = char_poly_product(w)
    return {
        "p": _s(verdict.p),
        "char_poly_closed": _poly_payload(closed),
        "char_poly_product": _poly_payload(product),
        "forms_agree": closed == product,
        "N": _s(verdict.N),
        "v_p": verdict.v,
        "sylow_order": _s(verdict.sylow_order),
        "theorem_holds": verdict.theorem_holds,
    }, EXIT_OK if verdict.theorem_holds else EXIT_PROPERTY_VIOLATION


def cmd_charpoly(args) -> tuple[dict, int]:
    field = validate_field(args.D, args.a, args.b)
    c1, c2, c3, c4 = args.c
    w = FrobeniusElement(c1=c1, c2=c2, c3=c3, c4=c4, field=field)
    product = char_poly_product(w)
    closed = char_poly_closed(product.p, c1, c2, args.D)
    weil = weil_validate(product)
    return {
        "p": _s(product.p),
        "char_poly_closed": _poly_payload(closed),
        "char_poly_product": _poly_payload(product),
        "forms_agree": closed == product,
        "N": _s(group_order(product)),
        "weil": {
            "constant_term_ok": weil.constant_term_ok,
            "functional_equation_ok": weil.functional_equation_ok,
            "root_moduli_ok": weil.root_moduli_ok,
        },
    }, EXIT_OK


def cmd_lemma2(args) -> tuple[dict, int]:
    report = verify_lemma2()
    results = {
        "row_count": len(report.rows),
        "expected_row_count": report.expected_row_count,
        "counterexample_count": len(report.counterexamples),
        "holds": report.holds(),
    }
    if args.rows:
        results["rows"] = [
            {
                "p": r.p,
                "D": r.D,
                "branch": r.branch,
                "c1": r.c1,
                "c2": r.c2,
                "N": _s(r.N),
                "div_p": r.div_p,
                "div_p2": r.div_p2,
                "excluded_nonprimitive": r.c2 == 0,
            }
            for r in report.rows
        ]
    return results, EXIT_OK if report.holds() else EXIT_PROPERTY_VIOLATION


def cmd_oracle(args) -> tuple[dict, int]:
    curve = GenusTwoCurve(p=args.p, f=args.coeffs)
    if args.mode == "count":
        n1 = count_points(curve, 1)
        n2 = count_points(curve, 2)
        P = char_poly_from_counts(n1, n2, curve.p)
        return {
            "N1": _s(n1),
            "N2": _s(n2),
            "char_poly": _poly_payload(P),
            "P1": _s(group_order(P)),
        }, EXIT_OK
    structure = enumerate_jacobian(curve, budget=_budget())
    n1 = count_points(curve, 1)
    n2 = count_points(curve, 2)
    P = char_poly_from_counts(n1, n2, curve.p)
    cross_check = group_order(P) == structure.order
    return {
        "order": _s(structure.order),
        "invariant_factors": [_s(n) for n in structure.invariant_factors],
        "p_sylow_factors": [_s(q) for q in structure.p_sylow_factors],
        "char_poly": _poly_payload(P),
        "cross_check_order_equals_P1": cross_check,
    }, EXIT_OK if cross_check else EXIT_PROPERTY_VIOLATION


def _random_squarefree_quintics(p: int, count: int, seed: int):
    rng = random.Random(seed)
    seen = set()
    while len(seen) < count:
        f = tuple(rng.randrange(p) for _ in range(5)) + (
            rng.randrange(1, p),
        )
        if f in seen:
            continue
        if len(poly_gcd(f, poly_derivative(f, p), p)) > 1:
            continue
        seen.add(f)
        yield f


def _all_squarefree_quintics(p: int):
    from itertools import product

    for tail in product(range(p), repeat=5):
        for lead in range(1, p):
            f = tail + (lead,)
            if len(poly_gcd(f, poly_derivative(f, p), p)) == 1:
                yield f


def cmd_scan(args) -> tuple[dict, int]:
    budget = _budget()
    if args.all:
        curves = _all_squarefree_quintics(args.p)
    else:
        curves = _random_squarefree_quintics(args.p, args.count, args.seed)
    checked = 0
    mismatches = []
    for f in curves:
        curve = GenusTwoCurve(p=args.p, f=f)
        order = enumerate_jacobian(curve, budget=budget).order
        P = char_poly_from_counts(
            count_points(curve, 1), count_points(curve, 2), args.p
        )
        checked += 1
        if group_order(P) != order:
            mismatches.append(
                {"coeffs": list(f), "order": _s(order), "P1": _s(group_order(P))}
            )
    return {
        "p": args.p,
        "curves_checked": checked,
        "mismatch_count": len(mismatches),
        "mismatches": mismatches,
        "all_match": not mismatches,
    }, EXIT_OK if not mismatches else EXIT_PROPERTY_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g2cm",
        description="Frobenius characteristic polynomials and p-Sylow "
        "analysis for genus-2 Jacobians with quartic CM",
    )
    parser.add_argument("--pretty", action="store_true",
                        help="human-readable output instead of JSON")
    parser.add_argument("--out", metavar="PATH",
                        help="also write the JSON report to PATH")
    sub = parser.add_subparsers(dest="command", required=True)

    p_field = sub.add_parser("field", help="validate a CM field (D, a, b)")
    p_field.add_argument("-D", type=int, required=True)
    p_field.add_argument("-a", type=int, required=True)
    p_field.add_argument("-b", type=int, required=True)
    p_field.set_defaults(func=cmd_field)

    for name, func, help_text in (
        ("analyze", cmd_analyze, "full Sylow pipeline for a Frobenius ω"),
        ("charpoly", cmd_charpoly, "characteristic polynomial of ω, both routes"),
    ):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("-D", type=int, required=True)
        sp.add_argument("-a", type=int, required=True)
        sp.add_argument("-b", type=int, required=True)
        sp.add_argument("-c", type=_parse_c, required=True,
                        metavar="c1,c2,c3,c4")
        sp.set_defaults(func=func)

    p_l2 = sub.add_parser("lemma2",
                          help="exhaustive p ≤ 5 case enumeration")
    p_l2.add_argument("--rows", action="store_true",
                      help="include the full table in the report")
    p_l2.set_defaults(func=cmd_lemma2)

    p_or = sub.add_parser("oracle", help="brute-force a single curve")
    p_or.add_argument("-p", type=int, required=True)
    p_or.add_argument("--coeffs", type=_parse_coeffs, required=True,
                      metavar="a0,a1,...", help="f coefficients, low degree first")
    p_or.add_argument("--mode", choices=("count", "enumerate"),
                      default="enumerate")
    p_or.set_defaults(func=cmd_oracle)

    p_scan = sub.add_parser("scan",
                            help="sweep curves comparing enumeration vs counts")
    p_scan.add_argument("-p", type=int, required=True)
    p_scan.add_argument("--count", type=int, default=25,
                        help="number of random curves (ignored with --all)")
    p_scan.add_argument("--all", action="store_true",
                        help="exhaust all squarefree degree-5 curves")
    p_scan.add_argument("--seed", type=int, default=0)
    p_scan.set_defaults(func=cmd_scan)

    return parser


def _echo_inputs(args) -> dict:
    skip = {"func", "command", "pretty", "out"}
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in skip:
            continue
        if isinstance(value, tuple):
            value = list(value)
        out[key] = value
    return out


def _render_pretty(envelope: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key, value in envelope.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_render_pretty(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(_render_pretty(item, indent + 1))
                lines.append(f"{pad}  -")
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    envelope = {
        "command": args.command,
        "inputs": _echo_inputs(args),
    }
    try:
        results, code = args.func(args)
        envelope["results"] = results
        envelope["status"] = "ok"
    except G2CMError as exc:
        envelope["results"] = None
        envelope["status"] = "error"
        envelope["error"] = {"code": exc.code, "message": exc.message}
        code = EXIT_INPUT_ERROR
    payload = json.dumps(envelope, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    print(_render_pretty(envelope) if args.pretty else payload)
    return code


if __name__ == "__main__":
    sys.exit(main())
