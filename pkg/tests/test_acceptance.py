"""Acceptance gate: nine exact criteria, one result line each.

Run with ``pytest tests/test_acceptance.py`` (the lines appear in the
terminal summary) or directly with ``python -m tests.test_acceptance``.
Every check is exact; there are no tolerances.
"""

from __future__ import annotations

import io
import itertools
import json
import random
import time
from fractions import Fraction

import pytest

from qarith.cli.main import run_command
from qarith.exact_arith import FracPoly, QFraction, frac_equal, poly_monomial_mul, poly_subst
from qarith.functional_equations import (
    JointClass,
    PolySequence,
    afe_construct,
    afe_extract_h,
    check_afe,
    check_mfe,
    classify_joint,
    verify_multiterm_product,
    verify_multiterm_sum,
)
from qarith.quantum_numbers import (
    limit_at_one,
    q_add,
    q_add_inverse,
    q_int,
    q_mul,
    q_mul_inverse,
    q_number,
    quantum_integer_poly,
)
from qarith.setops import decompose_mul, decompose_mul_r, genfun, partition_add, partition_add_r

RESULTS: dict = {}


def random_h(rng: random.Random) -> FracPoly:
    """Random polynomial with exponents in [-10, 10] (denominators up to 4)."""
    terms = []
    for _ in range(rng.randint(1, 6)):
        d = rng.choice([1, 1, 2, 3, 4])
        terms.append((Fraction(rng.randint(-10 * d, 10 * d), d),
                      Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 4))))
    return FracPoly(terms)


def criterion_1():
    """Ring isomorphism on |m|, |n| <= 50, under 10 s."""
    start = time.perf_counter()
    nums = {n: q_int(n) for n in range(-50, 51)}
    for m, n in itertools.product(range(-50, 51), repeat=2):
        if not frac_equal(q_add(nums[m], nums[n]).canonical, q_int(m + n).canonical):
            return False, f"add fails at ({m}, {n})"
        if not frac_equal(q_mul(nums[m], nums[n]).canonical, q_int(m * n).canonical):
            return False, f"mul fails at ({m}, {n})"
    elapsed = time.perf_counter() - start
    return elapsed < 10, f"10201 pairs in {elapsed:.2f} s (limit 10 s)"


def criterion_2():
    """Quantum rationals: 500 random pairs, numerators/denominators <= 12, under 30 s."""
    start = time.perf_counter()
    rng = random.Random(2)

    def draw():
        return Fraction(rng.randint(-12, 12), rng.randint(1, 12))

    for _ in range(500):
        x, y = draw(), draw()
        a, b = q_number(x), q_number(y)
        s, p = q_add(a, b), q_mul(a, b)  # both verify by cross-multiplication internally
        shifted = a.canonical + QFraction(poly_monomial_mul(b.canonical.num, x), b.canonical.den)
        if not frac_equal(shifted, q_number(x + y).canonical) or s.value != x + y:
            return False, f"add fails at ({x}, {y})"
        if x != 0:
            product = a.canonical * b.canonical.subst(x)
            if not frac_equal(product, q_number(x * y).canonical) or p.value != x * y:
                return False, f"mul fails at ({x}, {y})"
        if not frac_equal(q_add(a, q_add_inverse(a)).canonical, QFraction.zero()):
            return False, f"additive inverse fails at {x}"
        if x != 0 and not frac_equal(q_mul(a, q_mul_inverse(a)).canonical, QFraction.one()):
            return False, f"multiplicative inverse fails at {x}"
    elapsed = time.perf_counter() - start
    return elapsed < 30, f"500 pairs in {elapsed:.2f} s (limit 30 s)"


def criterion_3():
    """[-n]_q three ways for 1 <= n <= 50."""
    for n in range(1, 51):
        explicit = FracPoly({-k: -1 for k in range(1, n + 1)})
        shifted = poly_monomial_mul(quantum_integer_poly(n), -n, -1)
        reflected = poly_monomial_mul(poly_subst(quantum_integer_poly(n), -1), -1, -1)
        if not (explicit == shifted == reflected == q_int(-n).canonical.num):
            return False, f"forms differ at n = {n}"
    return True, "50 values, three forms equal"


def criterion_4():
    """afe construct/extract round trip for 1000 random h, N = 20."""
    rng = random.Random(4)
    for i in range(1000):
        h = random_h(rng)
        s = afe_construct(h, 20)
        if not check_afe(s):
            return False, f"check_afe fails for h = {h}"
        verdict = afe_extract_h(s)
        if not verdict or verdict.h != h:
            return False, f"extract fails for h = {h}"
    return True, "1000 random h round-tripped"


def criterion_5():
    """Only 0 and [n]_q solve both equations; q^(n-1) solves the mfe alone."""
    if classify_joint(afe_construct(FracPoly.one(), 12)).kind is not JointClass.QUANTUM:
        return False, "h = 1 not QUANTUM"
    if classify_joint(afe_construct(FracPoly(), 12)).kind is not JointClass.ZERO:
        return False, "h = 0 not ZERO"
    rng = random.Random(5)
    tested = 0
    while tested < 1000:
        h = random_h(rng)
        if h.is_zero() or h.is_one():
            continue
        tested += 1
        if classify_joint(afe_construct(h, 12)).kind is not JointClass.NOT_A_JOINT_SOLUTION:
            return False, f"h = {h} misclassified"
    monomials = PolySequence.from_function(lambda n: FracPoly.monomial(n - 1), 12)
    if not check_mfe(monomials) or check_afe(monomials):
        return False, "q^(n-1) should pass mfe and fail afe"
    return True, "h=1 QUANTUM, h=0 ZERO, 1000 others rejected, q^(n-1) mfe-only"


def criterion_6():
    """Interval decompositions match quantum arithmetic for 1 <= m, n <= 30, under 60 s."""
    start = time.perf_counter()
    for m, n in itertools.product(range(1, 31), repeat=2):
        part = partition_add(m, n)
        prod = decompose_mul(m, n)
        if not (part.ok and prod.ok):
            return False, f"decomposition fails at ({m}, {n})"
        low, high = part.parts
        added = genfun(low) + genfun(high)
        expected_sum = quantum_integer_poly(m) + poly_monomial_mul(quantum_integer_poly(n), m)
        if not (added == expected_sum == quantum_integer_poly(m + n) == q_add(q_int(m), q_int(n)).canonical.num):
            return False, f"sum identity fails at ({m}, {n})"
        low, spread = prod.parts
        multiplied = genfun(low) * genfun(spread)
        expected_prod = quantum_integer_poly(m) * poly_subst(quantum_integer_poly(n), m)
        if not (multiplied == expected_prod == quantum_integer_poly(m * n) == q_mul(q_int(m), q_int(n)).canonical.num):
            return False, f"product identity fails at ({m}, {n})"
    elapsed = time.perf_counter() - start
    return elapsed < 60, f"900 pairs in {elapsed:.2f} s (limit 60 s)"


def criterion_7():
    """r-fold partitions, direct sums and quantum identities for r <= 4, m_j <= 6."""
    count = 0
    for r in range(1, 5):
        for ms in itertools.product(range(1, 7), repeat=r):
            count += 1
            checks = (partition_add_r(ms).ok, decompose_mul_r(ms).ok,
                      bool(verify_multiterm_sum(ms)), bool(verify_multiterm_product(ms)))
            if not all(checks):
                return False, f"fails at {ms}: {checks}"
    return True, f"{count} tuples, four proofs each"


def criterion_8():
    """limit_at_one([x]) = x for integers and rationals."""
    values = [Fraction(n) for n in range(-30, 31)]
    values += [Fraction(m, n) for m in range(-12, 13) for n in range(1, 13)]
    for x in values:
        if limit_at_one(q_number(x)) != x:
            return False, f"limit wrong at {x}"
    return True, f"{len(values)} values"


CLASSIFY_WITNESS = {"equation": "mfe", "m": 2, "n": 2}


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), stdout=out, stderr=err)
    return code, out.getvalue()


def criterion_9():
    """The three documented CLI runs: exit codes and byte-stable JSON."""
    code, out = _run("verify", "ring", "--bound", "10", "--json")
    report = json.loads(out)
    if code != 0 or not report["rendering"].startswith("all identities verified"):
        return False, f"verify ring: exit {code}"
    if _run("verify", "ring", "--bound", "10", "--json") != (code, out):
        return False, "verify ring output not byte-stable"

    code, out = _run("classify", "--h", "1+q", "--n", "12", "--json")
    witness = json.loads(out)["witness"]
    if code != 1 or {k: witness[k] for k in CLASSIFY_WITNESS} != CLASSIFY_WITNESS:
        return False, f"classify: exit {code}, witness {witness}"
    if _run("classify", "--h", "1+q", "--n", "12", "--json") != (code, out):
        return False, "classify output not byte-stable"

    code, out = _run("eval", "qint(-2)", "--json")
    report = json.loads(out)
    if code != 0 or report["value"]["canonical"] != "-q^(-1) - q^(-2)":
        return False, f"eval: exit {code}, value {report['value']}"
    if _run("eval", "qint(-2)", "--json") != (code, out):
        return False, "eval output not byte-stable"
    code, out = _run("eval", "qint(-2)")
    if not out.rstrip("\n").endswith("-q^(-1) - q^(-2)"):
        return False, f"eval text output {out!r}"
    return True, "ring exit 0, classify exit 1 with mfe (2,2), eval renders -q^(-1) - q^(-2)"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(criterion):
    ok, detail = criterion()
    RESULTS[criterion.__name__] = (ok, detail)
    assert ok, detail


def summary_lines(results: dict) -> list:
    lines = []
    for fn in CRITERIA:
        if fn.__name__ in results:
            ok, detail = results[fn.__name__]
            number = fn.__name__.split("_")[1]
            lines.append(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {fn.__doc__.strip()} [{detail}]")
    return lines


if __name__ == "__main__":
    for fn in CRITERIA:
        RESULTS[fn.__name__] = fn()
        print(summary_lines({fn.__name__: RESULTS[fn.__name__]})[0], flush=True)
