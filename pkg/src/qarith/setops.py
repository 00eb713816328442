"""Finite integer sets: dilation, translation, sumsets, direct sums, and
their generating functions.

Every decomposition is verified by exhaustive enumeration. The generating
function ``F_A(q) = sum_{a in A} q^a`` carries the set identities over to
identities between quantum integers.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .errors import DomainError
from .exact_arith import FracPoly, poly_add, poly_monomial_mul, poly_mul, poly_subst

__all__ = [
    "IntSet",
    "interval",
    "dilate",
    "translate",
    "sumset",
    "union",
    "DirectStatus",
    "DirectSumResult",
    "direct_sum_check",
    "Proof",
    "partition_add",
    "decompose_mul",
    "partition_add_r",
    "decompose_mul_r",
    "genfun",
    "GenfunReport",
    "verify_genfun_identities",
    "representation_counts",
]


@dataclass(frozen=True)
class IntSet:
    """Finite set of integers, stored sorted without duplicates."""

    elements: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(int(x) for x in self.elements))))

    @classmethod
    def of(cls, *xs: int) -> "IntSet":
        return cls(xs)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in set(self.elements)

    def isdisjoint(self, other: "IntSet") -> bool:
        return set(self.elements).isdisjoint(other.elements)

    def __str__(self):
        return "{" + ", ".join(str(x) for x in self.elements) + "}"


def interval(n: int) -> IntSet:
    """``[n] = {0, 1, ..., n-1}``."""
    if n <= 0:
        raise DomainError(f"empty interval undefined for n = {n}")
    return IntSet(range(n))


def dilate(m: int, a: IntSet) -> IntSet:
    if m == 0:
        raise DomainError("degenerate dilation")
    return IntSet(m * x for x in a)


def translate(m: int, a: IntSet) -> IntSet:
    return IntSet(m + x for x in a)


def sumset(a: IntSet, b: IntSet) -> IntSet:
    return IntSet(x + y for x in a for y in b)


def union(a: IntSet, b: IntSet) -> IntSet:
    return IntSet(a.elements + b.elements)


class DirectStatus(Enum):
    DIRECT = "DIRECT"
    NOT_DIRECT = "NOT_DIRECT"


@dataclass(frozen=True)
class DirectSumResult:
    status: DirectStatus
    sum: IntSet
    counts: dict = field(repr=False, compare=False)
    # (c, (a1, b1), (a2, b2)) for the smallest c with two representations
    witness: tuple | None = None

    @property
    def is_direct(self) -> bool:
        return self.status is DirectStatus.DIRECT


def direct_sum_check(a: IntSet, b: IntSet) -> DirectSumResult:
    reps: dict = {}
    for x in a:
        for y in b:
            reps.setdefault(x + y, []).append((x, y))
    counts = {c: len(r) for c, r in sorted(reps.items())}
    total = IntSet(reps)
    for c in total:
        if len(reps[c]) > 1:
            return DirectSumResult(
                DirectStatus.NOT_DIRECT, total, counts, (c, reps[c][0], reps[c][1])
            )
    return DirectSumResult(DirectStatus.DIRECT, total, counts)


@dataclass(frozen=True)
class Proof:
    """Outcome of a verified set decomposition."""

    identity: str
    parts: tuple
    whole: IntSet
    ok: bool
    witness: object = None

    @property
    def status(self) -> str:
        return "verified" if self.ok else "failed"

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "parts": [list(p.elements) for p in self.parts],
            "witness": self.witness,
            "status": self.status,
        }


def _positive(*ns: int) -> None:
    if any(n < 1 for n in ns):
        raise DomainError("parts must be positive integers")


def partition_add(m: int, n: int) -> Proof:
    """``[m + n] = [m] u (m + [n])`` with the two parts disjoint."""
    _positive(m, n)
    low, high = interval(m), translate(m, interval(n))
    whole = interval(m + n)
    label = f"[{m} + {n}] = [{m}] u ({m} + [{n}])"
    if not low.isdisjoint(high):
        return Proof(label, (low, high), whole, False,
                     {"overlap": min(set(low.elements) & set(high.elements))})
    if union(low, high) != whole:
        return Proof(label, (low, high), whole, False, {"union": list(union(low, high).elements)})
    return Proof(label, (low, high), whole, True)


def decompose_mul(m: int, n: int) -> Proof:
    """``[mn] = [m] (+) m*[n]`` as a direct sum."""
    _positive(m, n)
    low, spread = interval(m), dilate(m, interval(n))
    whole = interval(m * n)
    label = f"[{m} * {n}] = [{m}] (+) {m}*[{n}]"
    ds = direct_sum_check(low, spread)
    if not ds.is_direct:
        c, r1, r2 = ds.witness
        return Proof(label, (low, spread), whole, False,
                     {"element": c, "representations": [list(r1), list(r2)]})
    if ds.sum != whole:
        return Proof(label, (low, spread), whole, False, {"sum": list(ds.sum.elements)})
    return Proof(label, (low, spread), whole, True)


def partition_add_r(ms: Sequence[int]) -> Proof:
    ms = list(ms)
    if not ms:
        raise DomainError("need at least one part")
    _positive(*ms)
    parts = []
    offset = 0
    for m in ms:
        parts.append(translate(offset, interval(m)))
        offset += m
    whole = interval(offset)
    label = f"[{' + '.join(map(str, ms))}] = partition"

    for (i, p), (j, r) in itertools.combinations(enumerate(parts), 2):
        if not p.isdisjoint(r):
            common = min(set(p.elements) & set(r.elements))
            return Proof(label, tuple(parts), whole, False, {"overlap": common, "parts": [i, j]})
    covered = IntSet(x for p in parts for x in p)
    if covered != whole:
        return Proof(label, tuple(parts), whole, False,
                     {"missing": sorted(set(whole.elements) ^ set(covered.elements))})
    return Proof(label, tuple(parts), whole, True)


def decompose_mul_r(ms: Sequence[int]) -> Proof:
    ms = list(ms)
    if not ms:
        raise DomainError("need at least one part")
    _positive(*ms)
    parts = []
    scale = 1
    for m in ms:
        parts.append(dilate(scale, interval(m)))
        scale *= m
    whole = interval(scale)
    label = f"[{' * '.join(map(str, ms))}] = direct sum"

    # every r-tuple must land on a distinct element of [prod]
    seen: dict = {}
    for combo in itertools.product(*(p.elements for p in parts)):
        s = sum(combo)
        if s in seen:
            return Proof(label, tuple(parts), whole, False,
                         {"element": s, "representations": [list(seen[s]), list(combo)]})
        seen[s] = combo
    if IntSet(seen) != whole:
        return Proof(label, tuple(parts), whole, False,
                     {"missing": sorted(set(whole.elements) ^ set(seen))})
    return Proof(label, tuple(parts), whole, True)


def genfun(a: IntSet) -> FracPoly:
    """``F_A(q) = sum of q^a over a in A``."""
    return FracPoly._from_dict(dict.fromkeys(a.elements, 1))


@dataclass
class GenfunReport:
    m: int
    results: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v for v in self.results.values() if v is not None)

    def to_json(self) -> dict:
        return {"m": self.m, "results": dict(self.results), "notes": list(self.notes)}


def verify_genfun_identities(a: IntSet, b: IntSet, m: int) -> GenfunReport:
    """Check the four generating-function identities for *a*, *b* and *m*.

    ``results`` maps ``dilation``, ``translation``, ``direct_sum`` and
    ``union`` to True/False, or None when the identity's hypothesis
    (direct sum, disjointness) does not hold.
    """
    if m == 0:
        raise DomainError("degenerate dilation")
    report = GenfunReport(m)
    fa, fb = genfun(a), genfun(b)
    report.results["dilation"] = genfun(dilate(m, a)) == poly_subst(fa, m)
    report.results["translation"] = genfun(translate(m, a)) == poly_monomial_mul(fa, m)

    ds = direct_sum_check(a, b)
    if ds.is_direct:
        report.results["direct_sum"] = genfun(ds.sum) == poly_mul(fa, fb)
    else:
        report.results["direct_sum"] = None
        report.notes.append("sumset not direct, product identity not applicable")

    if a.isdisjoint(b):
        report.results["union"] = genfun(union(a, b)) == poly_add(fa, fb)
    else:
        report.results["union"] = None
        report.notes.append("sets not disjoint, union identity not applicable")
    return report


def representation_counts(a: IntSet, b: IntSet) -> Counter:
    """Number of pairs ``(x, y)`` in ``a x b`` with ``x + y = c``, for each ``c``."""
    return Counter(x + y for x in a for y in b)
