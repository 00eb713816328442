import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qarith.errors import DomainError
from qarith.exact_arith import FracPoly, poly_add, poly_monomial_mul, poly_mul, poly_subst
from qarith.quantum_numbers import q_add, q_int, q_mul, quantum_integer_poly
from qarith.setops import (
    DirectStatus,
    IntSet,
    decompose_mul,
    decompose_mul_r,
    dilate,
    direct_sum_check,
    genfun,
    interval,
    partition_add,
    partition_add_r,
    representation_counts,
    sumset,
    translate,
    union,
    verify_genfun_identities,
)

int_sets = st.builds(IntSet, st.lists(st.integers(-15, 15), max_size=8))
nonzero = st.integers(-5, 5).filter(bool)


class TestIntSet:
    def test_sorted_unique(self):
        assert IntSet([3, 1, 3, -2]).elements == (-2, 1, 3)

    def test_render(self):
        assert str(IntSet([9, 0, 3, 6])) == "{0, 3, 6, 9}"
        assert str(IntSet()) == "{}"


class TestBasics:
    def test_interval(self):
        assert interval(4).elements == (0, 1, 2, 3)
        assert interval(1).elements == (0,)
        assert interval(2).elements == (0, 1)

    @pytest.mark.parametrize("n", [0, -3])
    def test_empty_interval_rejected(self, n):
        with pytest.raises(DomainError, match="empty interval"):
            interval(n)

    def test_dilate_translate(self):
        assert dilate(3, interval(4)) == IntSet([0, 3, 6, 9])
        assert translate(2, interval(3)) == IntSet([2, 3, 4])
        assert dilate(-1, IntSet([0, 1])) == IntSet([-1, 0])

    def test_degenerate_dilation(self):
        with pytest.raises(DomainError, match="degenerate dilation"):
            dilate(0, interval(3))

    @given(nonzero, int_sets)
    def test_dilation_preserves_size(self, m, a):
        assert len(dilate(m, a)) == len(a)
        assert len(translate(m, a)) == len(a)

    def test_sumset(self):
        assert sumset(IntSet([0, 1]), IntSet([0, 2])) == interval(4)
        a = IntSet([-3, 5, 8])
        assert sumset(a, IntSet([0])) == a
        assert sumset(IntSet(), a) == IntSet()


class TestDirectSum:
    def test_direct(self):
        result = direct_sum_check(IntSet([0, 1]), IntSet([0, 2]))
        assert result.status is DirectStatus.DIRECT
        assert result.sum == interval(4)

    def test_not_direct(self):
        result = direct_sum_check(IntSet([0, 1]), IntSet([0, 1]))
        assert result.status is DirectStatus.NOT_DIRECT
        c, r1, r2 = result.witness
        assert c == 1 and {r1, r2} == {(0, 1), (1, 0)}

    def test_trivial(self):
        assert direct_sum_check(IntSet([4, 7, 11]), IntSet([0])).is_direct

    @given(int_sets, int_sets)
    def test_agrees_with_pair_count(self, a, b):
        pairs = Counter(x + y for x, y in itertools.product(a, b))
        result = direct_sum_check(a, b)
        assert result.is_direct == all(v == 1 for v in pairs.values())
        assert result.sum == IntSet(pairs)


class TestPartitions:
    def test_two_three(self):
        proof = partition_add(2, 3)
        assert proof.ok
        assert [p.elements for p in proof.parts] == [(0, 1), (2, 3, 4)]
        assert proof.whole == interval(5)

    @pytest.mark.parametrize("m, n, low, high", [(1, 1, (0,), (1,)), (3, 1, (0, 1, 2), (3,))])
    def test_small(self, m, n, low, high):
        proof = partition_add(m, n)
        assert proof.ok and [p.elements for p in proof.parts] == [low, high]

    def test_decompose_three_four(self):
        proof = decompose_mul(3, 4)
        assert proof.ok
        low, spread = proof.parts
        assert low.elements == (0, 1, 2) and spread.elements == (0, 3, 6, 9)
        # brute force over all 12 pairs: every element of [12] hit exactly once
        sums = sorted(x + y for x in low for y in spread)
        assert sums == list(range(12))

    def test_decompose_edge_cases(self):
        for n in (1, 5):
            assert decompose_mul(1, n).ok
        assert [p.elements for p in decompose_mul(2, 2).parts] == [(0, 1), (0, 2)]

    def test_r_fold(self):
        proof = partition_add_r([2, 3, 4])
        assert proof.ok
        assert [p.elements for p in proof.parts] == [(0, 1), (2, 3, 4), (5, 6, 7, 8)]
        binary = decompose_mul_r([2, 2, 2])
        assert binary.ok
        assert [p.elements for p in binary.parts] == [(0, 1), (0, 2), (0, 4)]
        sums = sorted(sum(t) for t in itertools.product(*binary.parts))
        assert sums == list(range(8))

    def test_r2_matches_two_part(self):
        assert decompose_mul_r([2, 3]).parts == decompose_mul(2, 3).parts
        assert partition_add_r([2, 3]).parts == partition_add(2, 3).parts

    def test_r_fold_exhaustive(self):
        for r in range(1, 5):
            for ms in itertools.product(range(1, 7), repeat=r):
                assert partition_add_r(ms).ok, ms
                assert decompose_mul_r(ms).ok, ms

    def test_proof_json(self):
        out = decompose_mul(2, 2).to_json()
        assert list(out) == ["identity", "parts", "witness", "status"]
        assert out["parts"] == [[0, 1], [0, 2]] and out["status"] == "verified"

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            partition_add(0, 3)
        with pytest.raises(DomainError):
            decompose_mul_r([])


class TestGeneratingFunctions:
    def test_interval_is_quantum_integer(self):
        for n in range(1, 10):
            assert genfun(interval(n)) == quantum_integer_poly(n)

    def test_basic(self):
        assert genfun(IntSet()).is_zero()
        assert genfun(IntSet([-1, 2])) == FracPoly({-1: 1, 2: 1})

    def test_twelve(self):
        report = verify_genfun_identities(interval(3), dilate(3, interval(4)), 3)
        assert report.ok
        assert report.results == {"dilation": True, "translation": True, "direct_sum": True, "union": None}
        product = poly_mul(quantum_integer_poly(3), poly_subst(quantum_integer_poly(4), 3))
        assert product == quantum_integer_poly(12)

    def test_empty_partner(self):
        report = verify_genfun_identities(IntSet([1, 5, 6]), IntSet(), 1)
        assert report.results["union"] is True and report.results["direct_sum"] is True

    def test_not_direct(self):
        a = b = IntSet([0, 1])
        report = verify_genfun_identities(a, b, 1)
        assert report.results["direct_sum"] is None
        assert "sumset not direct, product identity not applicable" in report.notes
        assert genfun(a) * genfun(b) == FracPoly({0: 1, 1: 2, 2: 1})
        assert genfun(sumset(a, b)) == FracPoly({0: 1, 1: 1, 2: 1})

    @given(int_sets, int_sets, nonzero)
    @settings(max_examples=150)
    def test_homomorphism_laws(self, a, b, m):
        assert genfun(dilate(m, a)) == poly_subst(genfun(a), m)
        assert genfun(translate(m, a)) == poly_monomial_mul(genfun(a), m, 1)
        if a.isdisjoint(b):
            assert genfun(union(a, b)) == poly_add(genfun(a), genfun(b))
        if direct_sum_check(a, b).is_direct:
            assert genfun(sumset(a, b)) == poly_mul(genfun(a), genfun(b))
        assert verify_genfun_identities(a, b, m).ok

    @given(int_sets, int_sets)
    def test_coefficients_count_representations(self, a, b):
        product = poly_mul(genfun(a), genfun(b))
        counts = representation_counts(a, b)
        assert dict(product.terms) == dict(counts)
        assert direct_sum_check(a, b).is_direct == all(c <= 1 for _, c in product.terms)

    @pytest.mark.parametrize("m, n", [(2, 3), (5, 7), (1, 9)])
    def test_matches_quantum_arithmetic(self, m, n):
        low, high = partition_add(m, n).parts
        assert genfun(low) + genfun(high) == q_add(q_int(m), q_int(n)).canonical.num
        low, spread = decompose_mul(m, n).parts
        assert genfun(low) * genfun(spread) == q_mul(q_int(m), q_int(n)).canonical.num
