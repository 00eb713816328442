"""Additive and multiplicative functional equations for polynomial sequences.

For a sequence ``f_1, ..., f_N`` of polynomials in ``q``:

* afe: ``f_{m+n}(q) = f_m(q) + q^m f_n(q)``
* mfe: ``f_{mn}(q) = f_m(q) f_n(q^m)``

Both are checked on the bounded prefix ``1..N``. The afe solutions are
exactly ``h(q) [n]_q`` with ``h = f_1``; the only joint solutions are the
zero sequence and the quantum integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import DomainError
from .exact_arith import FracPoly, poly_add, poly_monomial_mul, poly_mul, poly_subst
from .quantum_numbers import quantum_integer_poly

__all__ = [
    "PolySequence",
    "Witness",
    "Verdict",
    "Classification",
    "JointClass",
    "check_afe",
    "check_mfe",
    "afe_extract_h",
    "afe_construct",
    "classify_joint",
    "verify_multiterm_sum",
    "verify_multiterm_product",
]


class PolySequence:
    """Finite 1-indexed sequence ``f_1 .. f_N`` of :class:`FracPoly`."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[FracPoly]):
        self.entries = tuple(entries)
        if not self.entries:
            raise DomainError("a polynomial sequence needs at least one entry")

    @classmethod
    def from_function(cls, fn, length: int) -> "PolySequence":
        return cls(fn(n) for n in range(1, length + 1))

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, n: int) -> FracPoly:
        if not 1 <= n <= len(self.entries):
            raise IndexError(f"index {n} outside 1..{len(self.entries)}")
        return self.entries[n - 1]

    def __eq__(self, other):
        if not isinstance(other, PolySequence):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"PolySequence(N={len(self)})"


@dataclass(frozen=True)
class Witness:
    m: int
    n: int
    lhs: FracPoly
    rhs: FracPoly
    equation: str = ""

    def to_json(self) -> dict:
        out = {}
        if self.equation:
            out["equation"] = self.equation
        out.update(m=self.m, n=self.n, lhs=str(self.lhs), rhs=str(self.rhs))
        return out


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: Witness | None = None
    h: FracPoly | None = None
    index: int | None = None  # first bad index from afe_extract_h

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "witness": self.witness.to_json() if self.witness else None,
            "h": str(self.h) if self.h is not None else None,
        }


def check_afe(s: PolySequence) -> Verdict:
    """Check the afe on every pair ``m + n <= N``, in lexicographic order."""
    N = len(s)
    for m in range(1, N):
        fm = s[m]
        for n in range(1, N - m + 1):
            lhs = s[m + n]
            rhs = poly_add(fm, poly_monomial_mul(s[n], m))
            if lhs != rhs:
                return Verdict(False, Witness(m, n, lhs, rhs, "afe"))
    return Verdict(True)


def _mfe_pairs(N: int):
    # proper factorizations first, then the pairs involving 1
    proper = [(m, n) for m in range(2, N + 1) for n in range(2, N // m + 1)]
    unit = [(m, n) for m in range(1, N + 1) for n in range(1, N // m + 1) if m == 1 or n == 1]
    return proper + unit


def check_mfe(s: PolySequence) -> Verdict:
    """Check the mfe on every pair ``m * n <= N``.

    Pairs with ``m, n >= 2`` are scanned first in lexicographic order, then
    the pairs containing a 1. The unit pairs only pin down ``f_1`` (they
    hold iff ``f_1 = 1`` or the whole prefix vanishes), so a failure among
    proper factorizations is the more informative witness.
    """
    N = len(s)
    for m, n in _mfe_pairs(N):
        lhs = s[m * n]
        rhs = poly_mul(s[m], poly_subst(s[n], m))
        if lhs != rhs:
            return Verdict(False, Witness(m, n, lhs, rhs, "mfe"))
    return Verdict(True)


def afe_extract_h(s: PolySequence) -> Verdict:
    """Recover ``h = f_1`` and confirm ``f_n = h [n]_q`` for every ``n <= N``.

    On failure ``index`` holds the first ``n`` where the factorization breaks.
    """
    h = s[1]
    for n in range(1, len(s) + 1):
        expected = poly_mul(h, quantum_integer_poly(n))
        if s[n] != expected:
            return Verdict(False, Witness(n, 0, s[n], expected, "afe"), index=n)
    return Verdict(True, h=h)


def afe_construct(h: FracPoly, N: int) -> PolySequence:
    if N < 1:
        raise DomainError("N must be >= 1")
    return PolySequence(poly_mul(h, quantum_integer_poly(n)) for n in range(1, N + 1))


class JointClass(Enum):
    ZERO = "ZERO"
    QUANTUM = "QUANTUM"
    NOT_A_JOINT_SOLUTION = "NOT_A_JOINT_SOLUTION"


@dataclass(frozen=True)
class Classification:
    kind: JointClass
    witness: Witness | None = None

    def to_json(self) -> dict:
        return {
            "status": self.kind.value,
            "witness": self.witness.to_json() if self.witness else None,
        }


def classify_joint(s: PolySequence) -> Classification:
    """Place *s* among the joint afe/mfe solutions: zero, quantum, or neither."""
    for check in (check_afe, check_mfe):
        verdict = check(s)
        if not verdict:
            return Classification(JointClass.NOT_A_JOINT_SOLUTION, verdict.witness)
    f1 = s[1]
    # f_1 = f_1^2 is forced by the mfe at m = n = 1
    assert poly_mul(f1, f1) == f1, "mfe passed but f_1 is not idempotent"
    if f1.is_zero():
        return Classification(JointClass.ZERO)
    if f1.is_one():
        return Classification(JointClass.QUANTUM)
    raise AssertionError(f"idempotent f_1 outside {{0, 1}}: {f1}")


def _check_positive(ms: Sequence[int]) -> list:
    ms = [int(m) for m in ms]
    if not ms:
        raise DomainError("need at least one part")
    if any(m < 1 for m in ms):
        raise DomainError("parts must be positive integers")
    return ms


def verify_multiterm_sum(ms: Sequence[int]) -> Verdict:
    """``[m_1 + ... + m_r]_q`` against ``sum_j q^(m_1 + ... + m_{j-1}) [m_j]_q``."""
    ms = _check_positive(ms)
    lhs = quantum_integer_poly(sum(ms))
    rhs = FracPoly()
    offset = 0
    for m in ms:
        rhs = poly_add(rhs, poly_monomial_mul(quantum_integer_poly(m), offset))
        offset += m
    if lhs != rhs:
        return Verdict(False, Witness(len(ms), 0, lhs, rhs, "multisum"))
    return Verdict(True)


def verify_multiterm_product(ms: Sequence[int]) -> Verdict:
    """``[m_1 ... m_r]_q`` against ``prod_j [m_j]_{q^(m_1 ... m_{j-1})}``."""
    ms = _check_positive(ms)
    total = 1
    for m in ms:
        total *= m
    lhs = quantum_integer_poly(total)
    rhs = FracPoly.one()
    scale = 1
    for m in ms:
        rhs = poly_mul(rhs, poly_subst(quantum_integer_poly(m), scale))
        scale *= m
    if lhs != rhs:
        return Verdict(False, Witness(len(ms), 0, lhs, rhs, "multiprod"))
    return Verdict(True)
