"""Bottom-up evaluation of parsed expressions."""

from __future__ import annotations

from fractions import Fraction

from ..errors import DomainError, QArithError
from ..exact_arith import FracPoly, QFraction, as_rational, format_rational, poly_subst
from ..quantum_numbers import QuantumNumber, q_add, q_add_inverse, q_int, q_mul, q_number, q_rational
from ..setops import IntSet, dilate, direct_sum_check, genfun, interval, sumset, translate, union
from .parser import BinOp, Call, IntervalLit, Neg, Num, QuantumLit, SetLit, Var, parse_expr


class EvalError(QArithError):
    def __init__(self, message: str, path: str):
        self.path = path
        super().__init__(f"error at {path}: {message}")


def _integer(x, what: str) -> int:
    if isinstance(x, int):
        return x
    raise DomainError(f"{what} must be an integer, got {format_rational(x)}")


def _promote(x):
    if isinstance(x, (FracPoly, QFraction)):
        return x
    return FracPoly.constant(x)


def evaluate(node, path: str = "$"):
    """Value of a type-checked AST: a rational, FracPoly, QFraction, QuantumNumber or IntSet."""
    try:
        return _eval(node, path)
    except EvalError:
        raise
    except QArithError as exc:
        raise EvalError(str(exc), path) from exc


def _eval(node, path):
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        return FracPoly.monomial(1)
    if isinstance(node, SetLit):
        return IntSet(node.elements)
    if isinstance(node, IntervalLit):
        return interval(_integer(evaluate(node.n, f"{path}.n"), "interval length"))
    if isinstance(node, QuantumLit):
        return q_number(evaluate(node.value, f"{path}.value"))
    if isinstance(node, Neg):
        v = evaluate(node.operand, f"{path}.operand")
        return q_add_inverse(v) if isinstance(v, QuantumNumber) else -v
    if isinstance(node, Call):
        args = [evaluate(a, f"{path}.args[{i}]") for i, a in enumerate(node.args)]
        return _call(node.name, args)
    if isinstance(node, BinOp):
        left = evaluate(node.left, f"{path}.left")
        right = evaluate(node.right, f"{path}.right")
        return _binop(node.op, left, right)
    raise EvalError(f"unknown node {node!r}", path)


def _call(name: str, args: list):
    if name == "qint":
        return q_int(_integer(args[0], "qint argument"))
    if name == "qrat":
        return q_rational(_integer(args[0], "numerator"), _integer(args[1], "denominator"))
    if name == "genfun":
        return genfun(args[0])
    p, r = args
    if isinstance(p, QFraction):
        return p.subst(r)
    if isinstance(p, FracPoly):
        return poly_subst(p, r)
    if r == 0:
        raise DomainError("substitution q -> q^0 is degenerate")
    return p


def _binop(op: str, left, right):
    if op == "(+)":
        if isinstance(left, IntSet):
            ds = direct_sum_check(left, right)
            if not ds.is_direct:
                c, (a1, b1), (a2, b2) = ds.witness
                raise DomainError(f"sum is not direct: {c} = {a1} + {b1} = {a2} + {b2}")
            return ds.sum
        return q_add(left, right)
    if op == "(*)":
        return q_mul(left, right)
    if op == "u":
        return union(left, right)
    if op == "t+":
        return translate(_integer(left, "translation"), right)
    if op == "+" and isinstance(left, IntSet):
        return sumset(left, right)
    if op == "*" and isinstance(right, IntSet):
        return dilate(_integer(left, "dilation factor"), right)
    if op == "^":
        if isinstance(left, FracPoly):
            return left ** right
        if not isinstance(right, int):
            raise DomainError("non-integer power of a number")
        if left == 0 and right < 0:
            raise DomainError("division by zero")
        return as_rational(Fraction(left) ** right)
    if op == "/":
        if isinstance(right, (int, Fraction)):
            if right == 0:
                raise DomainError("division by zero")
            if isinstance(left, (int, Fraction)):
                return as_rational(Fraction(left) / right)
            if isinstance(left, FracPoly):
                return left * as_rational(Fraction(1) / right)
        left = left if isinstance(left, QFraction) else QFraction(_promote(left))
        right = right if isinstance(right, QFraction) else QFraction(_promote(right))
        return left / right
    scalar = all(isinstance(v, (int, Fraction)) for v in (left, right))
    if not scalar and isinstance(left, QFraction) != isinstance(right, QFraction):
        left = left if isinstance(left, QFraction) else QFraction(_promote(left))
        right = right if isinstance(right, QFraction) else QFraction(_promote(right))
    if op == "+":
        result = left + right
    elif op == "-":
        result = left - right
    elif op == "*":
        result = left * right
    else:
        raise DomainError(f"unsupported operator {op}")
    return as_rational(result) if scalar else result


def render_literal(value) -> str:
    """Text that parses back to *value*."""
    if isinstance(value, QuantumNumber):
        return value.label()
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    return str(value)


def render_value(value) -> str:
    """Display form; quantum numbers also show their canonical representation."""
    if isinstance(value, QuantumNumber):
        return str(value)
    return render_literal(value)


def eval_expr(src: str) -> str:
    return render_value(evaluate(parse_expr(src)))
