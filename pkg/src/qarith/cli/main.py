"""``qarith`` command-line entry point.

Exit status: 0 on success, 1 when a verification fails (the report carries
a witness), 2 on usage, parse or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from ..errors import QArithError
from ..exact_arith import FracPoly, QFraction, format_rational
from ..functional_equations import (
    JointClass,
    afe_construct,
    check_afe,
    check_mfe,
    classify_joint,
    verify_multiterm_product,
    verify_multiterm_sum,
)
from ..quantum_numbers import QuantumNumber, quantum_integer_poly, verify_ring_laws
from ..setops import IntSet, decompose_mul, decompose_mul_r, genfun, partition_add, partition_add_r
from .evaluate import evaluate, render_literal, render_value
from .parser import parse_expr

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_N = 20
DEFAULT_RING_BOUND = 5


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _report(status: str, value, witness, rendering: str) -> dict:
    # field order is part of the output format
    return {"status": status, "value": value, "witness": witness, "rendering": rendering}


def _parse_poly(text: str) -> FracPoly:
    value = evaluate(parse_expr(text))
    if isinstance(value, QFraction) and value.den.is_one():
        value = value.num
    if isinstance(value, FracPoly):
        return value
    if isinstance(value, int) or hasattr(value, "denominator"):
        return FracPoly.constant(value)
    raise QArithError(f"expected a polynomial, got {render_literal(value)!r}")


def _parse_ms(text: str) -> list:
    try:
        ms = [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"--ms expects comma-separated integers, got {text!r}") from None
    if not ms or any(m < 1 for m in ms):
        raise UsageError("--ms entries must be positive integers")
    return ms


def _length(args) -> int:
    n = args.n if args.n is not None else getattr(args, "bound", None) or DEFAULT_N
    if n < 1:
        raise UsageError("--n must be >= 1")
    return n


# -- subcommands --------------------------------------------------------------

def cmd_eval(args) -> tuple:
    value = evaluate(parse_expr(args.expr))
    if isinstance(value, QuantumNumber):
        shown = {"x": format_rational(value.value), "canonical": str(value.canonical)}
    else:
        shown = render_literal(value)
    return EXIT_OK, _report("ok", shown, None, render_value(value))


def cmd_verify_ring(args) -> tuple:
    bound = getattr(args, "bound", None) or DEFAULT_RING_BOUND
    if bound < 1:
        raise UsageError("--bound must be >= 1")
    report = verify_ring_laws(bound)
    value = {"bound": bound, "checked": report.checked}
    witness = report.violations[0] if report.violations else None
    status = "pass" if report.passed else "fail"
    return (EXIT_OK if report.passed else EXIT_FAIL), _report(status, value, witness, report.summary())


def cmd_verify_fe(args) -> tuple:
    h = _parse_poly(args.h)
    n = _length(args)
    seq = afe_construct(h, n)
    verdict = (check_afe if args.which == "afe" else check_mfe)(seq)
    value = {"equation": args.which, "h": str(h), "N": n}
    if verdict:
        text = f"{args.which} holds for f_n = h(q)[n]_q, h = {h}, n <= {n}"
    else:
        w = verdict.witness
        text = f"{args.which} fails at m={w.m}, n={w.n}: {w.lhs} != {w.rhs}"
    witness = verdict.witness.to_json() if verdict.witness else None
    return (EXIT_OK if verdict else EXIT_FAIL), _report(verdict.status, value, witness, text)


def cmd_verify_multi(args) -> tuple:
    ms = _parse_ms(args.ms)
    if args.which == "multisum":
        verdict = verify_multiterm_sum(ms)
        total, sep = sum(ms), " + "
    else:
        verdict = verify_multiterm_product(ms)
        total, sep = 1, " * "
        for m in ms:
            total *= m
    value = {"ms": ms, "poly": str(quantum_integer_poly(total))}
    label = f"[{sep.join(map(str, ms))}]_q"
    if verdict:
        text = f"{label} = [{total}]_q verified"
    else:
        text = f"{label} mismatch: {verdict.witness.lhs} != {verdict.witness.rhs}"
    witness = verdict.witness.to_json() if verdict.witness else None
    return (EXIT_OK if verdict else EXIT_FAIL), _report(verdict.status, value, witness, text)


def cmd_classify(args) -> tuple:
    h = _parse_poly(args.h)
    n = _length(args)
    result = classify_joint(afe_construct(h, n))
    value = {"classification": result.kind.value, "h": str(h), "N": n}
    if result.kind is JointClass.NOT_A_JOINT_SOLUTION:
        w = result.witness
        text = f"not a joint solution: {w.equation} fails at m={w.m}, n={w.n}"
        return EXIT_FAIL, _report("fail", value, w.to_json(), text)
    text = "f_n = 0 for all n" if result.kind is JointClass.ZERO else "f_n = [n]_q for all n"
    return EXIT_OK, _report("pass", value, None, text)


def cmd_decompose(args) -> tuple:
    ms = _parse_ms(args.ms)
    if args.which == "add":
        proof = partition_add(*ms) if len(ms) == 2 else partition_add_r(ms)
    else:
        proof = decompose_mul(*ms) if len(ms) == 2 else decompose_mul_r(ms)
    joiner = " u " if args.which == "add" else " (+) "
    text = f"{proof.whole} = {joiner.join(str(p) for p in proof.parts)}: {proof.status}"
    value = {"identity": proof.identity, "parts": [list(p.elements) for p in proof.parts],
             "whole": list(proof.whole.elements)}
    status = "pass" if proof.ok else "fail"
    return (EXIT_OK if proof.ok else EXIT_FAIL), _report(status, value, proof.witness, text)


def cmd_genfun(args) -> tuple:
    value = evaluate(parse_expr(args.set))
    if not isinstance(value, IntSet):
        raise QArithError(f"--set expects a set expression, got {render_literal(value)!r}")
    poly = genfun(value)
    return EXIT_OK, _report("ok", str(poly), None, f"F_{value}(q) = {poly}")


# -- argument parsing ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print the report as JSON")
    common.add_argument("--bound", type=int, default=argparse.SUPPRESS,
                        help="range bound for ring checks; default sequence length elsewhere")
    common.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS,
                        help="also write the JSON report to PATH")

    parser = _ArgumentParser(prog="qarith", parents=[common],
                             description="Exact quantum-integer arithmetic and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)

    verify = sub.add_parser("verify", parents=[common], help="verify identities")
    vsub = verify.add_subparsers(dest="which", required=True, parser_class=_ArgumentParser)
    p = vsub.add_parser("ring", parents=[common])
    p.set_defaults(func=cmd_verify_ring)
    for name in ("afe", "mfe"):
        p = vsub.add_parser(name, parents=[common])
        p.add_argument("--h", required=True, help="polynomial h(q); checks f_n = h(q)[n]_q")
        p.add_argument("--n", type=int, default=None, help=f"sequence length (default {DEFAULT_N})")
        p.set_defaults(func=cmd_verify_fe)
    for name in ("multisum", "multiprod"):
        p = vsub.add_parser(name, parents=[common])
        p.add_argument("--ms", required=True, help="comma-separated positive integers")
        p.set_defaults(func=cmd_verify_multi)

    p = sub.add_parser("classify", parents=[common], help="classify f_n = h(q)[n]_q")
    p.add_argument("--h", required=True)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", parents=[common], help="interval decompositions")
    p.add_argument("which", choices=["add", "mul"])
    p.add_argument("--ms", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("genfun", parents=[common], help="generating function of a set")
    p.add_argument("--set", required=True)
    p.set_defaults(func=cmd_genfun)
    return parser


def run_command(argv: Sequence[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        code, report = args.func(args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        print(parser.format_usage().rstrip(), file=stderr)
        print(exc, file=stderr)
        return EXIT_USAGE
    except QArithError as exc:
        print(f"qarith: {exc}", file=stderr)
        return EXIT_USAGE

    text = json.dumps(report, indent=2)
    if getattr(args, "json", False):
        print(text, file=stdout)
    else:
        print(report["rendering"], file=stdout)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return code


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
