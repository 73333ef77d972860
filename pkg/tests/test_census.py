import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permcensus import census, oracle
from permcensus.census import (
    ALL_STAT_KINDS,
    BaseStat,
    CensusEngine,
    CosetQuery,
    StatKind,
    coset_size,
    f_closed,
    ncm_closed,
)
from permcensus.numeric import delta, divisors, factorial, nabla


class TestStatKind:
    def test_twelve_distinct(self):
        assert len(set(ALL_STAT_KINDS)) == 12

    @pytest.mark.parametrize(
        "code", ["om", "nom", "od", "nod", "oe", "noe", "cm", "ncm", "cd", "ncd", "ce", "nce"]
    )
    def test_parse_roundtrip(self, code):
        kind = StatKind.parse(code)
        assert kind.code == code
        assert kind.complement().complement() == kind
        assert kind.complement().code != code

    def test_parse_case_insensitive(self):
        assert StatKind.parse(" nCM ") == StatKind(BaseStat.CYCLE_MULTIPLE, True)

    def test_unknown_rejected(self):
        with pytest.raises(ValueError, match="unknown stat"):
            StatKind.parse("xyz")


class TestCosetQuery:
    def test_validation(self):
        kind = StatKind.parse("ncm")
        with pytest.raises(ValueError):
            CosetQuery(kind, 0, 4, 1)
        with pytest.raises(ValueError):
            CosetQuery(kind, 2, 4, 5)
        with pytest.raises(ValueError):
            CosetQuery(kind, 2, 4, 0)


class TestCosetSize:
    def test_single_long_cycle(self):
        assert coset_size(7, 7) == 1

    def test_whole_group(self):
        assert coset_size(5, 1) == 120

    def test_one_point_stabilizer_coset(self):
        assert coset_size(4, 2) == 6

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            coset_size(4, 5)


class TestStatCount:
    def test_pinned_examples(self):
        eng = CensusEngine()
        assert eng.count("ncm", 2, 4, 1) == 9
        assert eng.count("od", 2, 4, 1) == 10
        assert eng.count("ncm", 2, 4, 2) == 2
        assert eng.count("noe", 2, 4, 2) == 4

    def test_initial_conditions_on_full_cycle(self):
        eng = CensusEngine()
        for q in range(1, 11):
            for n in range(1, 11):
                assert eng.count("nom", q, n, n) == (1 if n % q != 0 else 0)
                assert eng.count("od", q, n, n) == (1 if q % n == 0 else 0)
                assert eng.count("noe", q, n, n) == (1 if q != n else 0)
                assert eng.count("ncm", q, n, n) == (1 if n % q != 0 else 0)
                assert eng.count("ncd", q, n, n) == (1 if q % n != 0 else 0)
                assert eng.count("nce", q, n, n) == (1 if q != n else 0)

    def test_matches_coset_oracle(self):
        eng = CensusEngine()
        for q in range(1, 7):
            for n in range(1, 7):
                for k in range(1, n + 1):
                    for kind in ALL_STAT_KINDS:
                        want = oracle.oracle_coset(kind, q, n, k)
                        got = eng.stat_count(CosetQuery(kind, q, n, k))
                        assert got == want, (kind.code, q, n, k)

    def test_q_one_degenerates(self):
        eng = CensusEngine()
        for n in range(1, 9):
            assert eng.count("ncm", 1, n) == 0
            assert eng.count("nom", 1, n) == 0
            assert eng.count("od", 1, n) == 1  # identity only
            assert eng.count("noe", 1, n) == factorial(n) - 1
            assert eng.count("ce", 1, n) == factorial(n) - oracle.oracle_sym(
                StatKind.parse("nce"), 1, n
            )

    def test_strict_inequality_for_composite_modulus(self):
        eng = CensusEngine()
        assert eng.count("nom", 6, 5) == 100
        assert eng.count("ncm", 6, 5) == 120

    def test_memoized_requery_is_stable_and_free(self):
        eng = CensusEngine()
        first = eng.count("noe", 12, 30, 7)
        ops = eng.op_count
        again = eng.count("noe", 12, 30, 7)
        assert first == again
        assert eng.op_count == ops  # nothing recomputed

    def test_no_recursion_depth_limit(self):
        eng = CensusEngine()
        assert eng.count("ncm", 7, 400, 1) == f_closed(7, 400)

    @given(
        st.integers(1, 8),
        st.integers(1, 8),
        st.integers(1, 8),
        st.sampled_from(ALL_STAT_KINDS),
    )
    def test_complement_identity(self, q, n, k, kind):
        if k > n:
            k = n
        eng = census.default_engine()
        a = eng.stat_count(CosetQuery(kind, q, n, k))
        b = eng.stat_count(CosetQuery(kind.complement(), q, n, k))
        assert a + b == coset_size(n, k)
        assert 0 <= a <= coset_size(n, k)

    def test_complement_method(self):
        eng = CensusEngine()
        nom = CosetQuery(StatKind.parse("nom"), 2, 4, 1)
        assert eng.complement(nom) == 24 - 9 == 15
        od = CosetQuery(StatKind.parse("od"), 2, 4, 2)
        flipped = CosetQuery(StatKind.parse("nod"), 2, 4, 2)
        assert eng.complement(od) == 6 - eng.stat_count(od)
        assert eng.complement(od) == eng.stat_count(flipped)


class TestClosedForm:
    def test_f_examples(self):
        assert f_closed(2, 4) == 9
        assert f_closed(5, 0) == 1
        assert f_closed(1, 3) == 0
        assert f_closed(2, 10) == 893025

    def test_f_even_case_is_central_binomial(self):
        # f_2(2m)/(2m)! telescopes to binom(2m, m)/4^m
        for m in range(1, 12):
            assert f_closed(2, 2 * m) * 4**m == math.comb(2 * m, m) * factorial(2 * m)

    def test_ncm_examples(self):
        assert ncm_closed(2, 4, 2) == 2
        assert ncm_closed(3, 5, 2) == 16

    def test_ncm_at_k_one_is_f(self):
        for q in range(1, 8):
            for n in range(1, 30):
                assert ncm_closed(q, n, 1) == f_closed(q, n)

    def test_matches_recurrence(self):
        for q in range(1, 9):
            eng = CensusEngine()
            for n in range(1, 61):
                for k in range(1, n + 1):
                    assert ncm_closed(q, n, k) == eng.count("ncm", q, n, k), (q, n, k)


def _printed_order_equals(q, n, k, memo):
    """The uncorrected recursion for the no-element-of-order-q count: its head
    sums the complements OVER divisors without the inclusion bookkeeping."""
    key = (q, n, k)
    if key in memo:
        return memo[key]
    if k == n:
        v = 1 if q != n else 0
    else:
        t = n - k
        head = sum(
            _printed_order_equals(d * delta(q, k), t, 1, memo)
            for d in divisors(nabla(q, k))
        )
        v = head + t * _printed_order_equals(q, n, k + 1, memo)
    memo[key] = v
    return v


class TestCorrectedOrderEqualsRecurrence:
    """The head of the order-equals recursion needs a divides-guard and an
    inclusion constant; the uncorrected head overcounts. Keep the bad value
    pinned so the correction cannot silently regress."""

    def test_uncorrected_form_overcounts(self):
        assert _printed_order_equals(2, 4, 2, {}) == 6

    def test_corrected_form_matches_enumeration(self):
        eng = CensusEngine()
        assert eng.count("noe", 2, 4, 2) == 4
        assert oracle.oracle_coset(StatKind.parse("noe"), 2, 4, 2) == 4

    def test_corrected_head_degenerates_to_single_term(self):
        # with k dividing m and no component of m dividing k, the corrected
        # head is exactly the one complement term the uncorrected head has:
        # the coefficient vanishes and a single source column remains
        plan = census._Plan(BaseStat.ORDER_EQUALS, 12)
        plan.extend(BaseStat.ORDER_EQUALS, 40)
        for mi, m in enumerate(plan.moduli):
            coeff, srcs = plan.per_mod[mi]
            for k in range(1, 41):
                if m % k == 0 and nabla(m, k) == 1:
                    assert coeff[k] == 0
                    assert srcs[k] == (plan.index[delta(m, k)],)
                elif m % k != 0:
                    assert coeff[k] == 1 and srcs[k] == ()


class TestEngineSharing:
    def test_tables_shared_across_query_moduli(self):
        # order-equals at modulus 12 walks every divisor; a later query at a
        # divisor modulus must reuse those tables rather than refill
        eng = CensusEngine()
        eng.count("noe", 12, 25)
        ops = eng.op_count
        eng.count("noe", 6, 25)
        eng.count("noe", 4, 20)
        assert eng.op_count == ops

    def test_independent_engines_agree(self):
        a, b = CensusEngine(), CensusEngine()
        for q, n, k in [(6, 12, 3), (8, 10, 1), (5, 9, 9)]:
            for code in ("nom", "noe", "ncd"):
                assert a.count(code, q, n, k) == b.count(code, q, n, k)
