"""Quantum integers and quantum rationals.

A :class:`QuantumNumber` carries its abstract value ``x`` and a concrete
rational function representing ``[x]_q = (1 - q^x) / (1 - q)``. Ring
operations compute the result by the value rule (``x + y``, ``x * y``) and
then check that the defining expression, evaluated on the representations,
agrees with the canonical form of the result. A disagreement raises
:class:`~qarith.errors.IdentityViolation`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, IdentityViolation
from .exact_arith import (
    FracPoly,
    QFraction,
    as_rational,
    format_rational,
    frac_add,
    frac_equal,
    frac_mul,
    poly_eval,
    poly_monomial_mul,
)

__all__ = [
    "QuantumNumber",
    "quantum_integer_poly",
    "q_int",
    "q_rational",
    "q_number",
    "q_add",
    "q_mul",
    "q_add_inverse",
    "q_mul_inverse",
    "limit_at_one",
    "RingReport",
    "verify_ring_laws",
]


def quantum_integer_poly(n: int) -> FracPoly:
    """``[n]_q`` as a Laurent polynomial.

    ``1 + q + ... + q^(n-1)`` for n > 0, ``0`` for n = 0 and
    ``-(q^-1 + ... + q^n)`` for n < 0.
    """
    if n >= 0:
        return FracPoly._from_dict(dict.fromkeys(range(n), 1))
    return FracPoly._from_dict(dict.fromkeys(range(n, 0), -1))


def _canonical(x) -> QFraction:
    if isinstance(x, int):
        return QFraction(quantum_integer_poly(x))
    one = FracPoly.one()
    return QFraction(one - FracPoly.monomial(x), one - FracPoly.monomial(1))


@dataclass(frozen=True, eq=False)
class QuantumNumber:
    """The quantum number ``[value]_q`` together with its canonical representation."""

    value: int | Fraction
    canonical: QFraction = field(repr=False)

    def __eq__(self, other):
        if not isinstance(other, QuantumNumber):
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __add__(self, other):
        return q_add(self, other)

    def __mul__(self, other):
        return q_mul(self, other)

    def __neg__(self):
        return q_add_inverse(self)

    def label(self) -> str:
        return f"[{format_rational(self.value)}]_q"

    def __str__(self):
        return f"{self.label()} = {self.canonical}"


def q_number(x) -> QuantumNumber:
    x = as_rational(x)
    return QuantumNumber(x, _canonical(x))


def q_int(n: int) -> QuantumNumber:
    return q_number(int(n))


def q_rational(m: int, n: int) -> QuantumNumber:
    """``[m/n]_q``; the fraction is reduced before the exponent is formed."""
    if n == 0:
        raise DomainError("undefined quantum number")
    return q_number(Fraction(m, n))


def q_add(a: QuantumNumber, b: QuantumNumber) -> QuantumNumber:
    """Quantum addition ``[x] (+) [y] = [x]_q + q^x [y]_q``, giving ``[x + y]``."""
    result = q_number(a.value + b.value)
    shifted = QFraction(poly_monomial_mul(b.canonical.num, a.value), b.canonical.den)
    rhs = frac_add(a.canonical, shifted)
    if not frac_equal(rhs, result.canonical):
        raise IdentityViolation(
            f"identity violation: {a.label()} (+) {b.label()} != {result.label()}"
        )
    return result


def q_mul(a: QuantumNumber, b: QuantumNumber) -> QuantumNumber:
    """Quantum multiplication ``[x] (*) [y] = [x]_q [y]_{q^x}``, giving ``[x y]``.

    ``[0] (*) [y]`` is ``[0]`` by the value rule; the substitution ``q -> q^0``
    is never formed.
    """
    if a.value == 0:
        return q_number(0)
    result = q_number(a.value * b.value)
    rhs = frac_mul(a.canonical, b.canonical.subst(a.value))
    if not frac_equal(rhs, result.canonical):
        raise IdentityViolation(
            f"identity violation: {a.label()} (*) {b.label()} != {result.label()}"
        )
    return result


def q_add_inverse(a: QuantumNumber) -> QuantumNumber:
    result = q_number(-a.value)
    total = q_add(a, result)
    if not frac_equal(total.canonical, QFraction.zero()):
        raise IdentityViolation(f"identity violation: {a.label()} (+) {result.label()} != 0")
    # [-x]_q = -q^(-x) [x]_q
    reflected = QFraction(poly_monomial_mul(a.canonical.num, -a.value, -1), a.canonical.den)
    if not frac_equal(reflected, result.canonical):
        raise IdentityViolation(f"identity violation: {result.label()} != -q^(-x){a.label()}")
    return result


def q_mul_inverse(a: QuantumNumber) -> QuantumNumber:
    if a.value == 0:
        raise DomainError("zero has no multiplicative inverse")
    result = q_number(1 / Fraction(a.value))
    product = q_mul(a, result)
    if not frac_equal(product.canonical, QFraction.one()):
        raise IdentityViolation(f"identity violation: {a.label()} (*) {result.label()} != 1")
    return result


def limit_at_one(a: QuantumNumber):
    """``lim_{q -> 1} [x]_q``, by exact evaluation.

    For ``x = m/n`` this is ``[m]_t / [n]_t`` at ``t = 1`` with ``t = q^(1/n)``.
    """
    x = Fraction(a.value)
    if x.denominator == 1:
        return poly_eval(a.canonical.num, 1)
    top = poly_eval(quantum_integer_poly(x.numerator), 1)
    bottom = poly_eval(quantum_integer_poly(x.denominator), 1)
    return as_rational(Fraction(top, bottom))


@dataclass
class RingReport:
    bound: int
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, law: str, args: tuple, ok: bool) -> None:
        self.checked += 1
        if not ok:
            self.violations.append({"law": law, "args": [format_rational(x) for x in args]})

    def summary(self) -> str:
        if self.passed:
            return f"all identities verified ({self.checked} checks, bound {self.bound})"
        first = self.violations[0]
        return (
            f"{len(self.violations)} of {self.checked} checks failed; "
            f"first: {first['law']} at ({', '.join(first['args'])})"
        )


def verify_ring_laws(bound: int, triples: int = 2000, seed: int = 0) -> RingReport:
    """Check the ring isomorphism and ring axioms on ``[-bound, bound]``.

    The isomorphism identities are checked on every pair; the three-variable
    axioms on every triple when there are at most *triples* of them, else on
    a seeded sample of that size.
    """
    if bound < 1:
        raise DomainError("bound must be >= 1")
    report = RingReport(bound)
    values = range(-bound, bound + 1)
    nums = {n: q_int(n) for n in values}

    def safe(fn):
        try:
            return fn()
        except IdentityViolation:
            return False

    for m, n in itertools.product(values, repeat=2):
        a, b = nums[m], nums[n]
        report.record("add-isomorphism", (m, n), safe(
            lambda: frac_equal(q_add(a, b).canonical, q_int(m + n).canonical)))
        report.record("mul-isomorphism", (m, n), safe(
            lambda: frac_equal(q_mul(a, b).canonical, q_int(m * n).canonical)))

    all_triples = list(itertools.product(values, repeat=3))
    if len(all_triples) > triples:
        all_triples = random.Random(seed).sample(all_triples, triples)
    for x, y, z in all_triples:
        a, b, c = nums[x], nums[y], nums[z]
        report.record("add-commutative", (x, y), safe(
            lambda: frac_equal(q_add(a, b).canonical, q_add(b, a).canonical)))
        report.record("mul-commutative", (x, y), safe(
            lambda: frac_equal(q_mul(a, b).canonical, q_mul(b, a).canonical)))
        report.record("add-associative", (x, y, z), safe(
            lambda: frac_equal(q_add(q_add(a, b), c).canonical, q_add(a, q_add(b, c)).canonical)))
        report.record("mul-associative", (x, y, z), safe(
            lambda: frac_equal(q_mul(q_mul(a, b), c).canonical, q_mul(a, q_mul(b, c)).canonical)))
        report.record("distributive", (x, y, z), safe(
            lambda: frac_equal(q_mul(a, q_add(b, c)).canonical,
                               q_add(q_mul(a, b), q_mul(a, c)).canonical)))
    return report
