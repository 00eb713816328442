"""Exact arithmetic for quantum integers and quantum rationals.

The kernel works with polynomials in ``q`` that may carry negative and
fractional exponents, quantum numbers ``[x]_q = (1 - q^x)/(1 - q)`` with their
self-verifying ring operations, the additive/multiplicative functional
equations, and the interval decompositions whose generating functions are
quantum integers.
"""

from .errors import DomainError, EvaluationError, IdentityViolation, QArithError
from .exact_arith import (
    FracPoly,
    QFraction,
    Rational,
    frac_add,
    frac_equal,
    frac_mul,
    poly_add,
    poly_eval,
    poly_monomial_mul,
    poly_mul,
    poly_subst,
)
from .quantum_numbers import (
    QuantumNumber,
    limit_at_one,
    q_add,
    q_add_inverse,
    q_int,
    q_mul,
    q_mul_inverse,
    q_rational,
    verify_ring_laws,
)

__all__ = [
    "DomainError", "EvaluationError", "IdentityViolation", "QArithError",
    "FracPoly", "QFraction", "Rational", "frac_add", "frac_equal", "frac_mul",
    "poly_add", "poly_eval", "poly_monomial_mul", "poly_mul", "poly_subst",
    "QuantumNumber", "limit_at_one", "q_add", "q_add_inverse", "q_int", "q_mul",
    "q_mul_inverse", "q_rational", "verify_ring_laws",
]

__version__ = "0.1.0"
