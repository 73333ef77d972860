import pytest
from hypothesis import given
from hypothesis import strategies as st

from permcensus import numeric


def iterated_product(n):
    # second, independent big-integer route for factorials
    out = 1
    for j in range(2, n + 1):
        out *= j
    return out


class TestFactorial:
    def test_zero_is_empty_product(self):
        assert numeric.factorial(0) == 1

    def test_small(self):
        assert numeric.factorial(4) == 24

    def test_twenty_matches_independent_product(self):
        assert numeric.factorial(20) == 2432902008176640000
        assert numeric.factorial(20) == iterated_product(20)

    def test_large_stays_exact(self):
        value = numeric.factorial(300)
        assert value == iterated_product(300)
        # exactly floor(300/5)+floor(300/25)+floor(300/125) trailing zeros
        assert value % 10**74 == 0 and value % 10**75 != 0

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            numeric.factorial(-1)


def trial_division_powers(q):
    # naive oracle for the prime-power split
    out = []
    p = 2
    while q > 1:
        if q % p == 0:
            e = 0
            while q % p == 0:
                q //= p
                e += 1
            out.append((p, e, p**e))
        p += 1
    return out


class TestFactorPrimePowers:
    def test_twelve(self):
        f = numeric.factor_prime_powers(12)
        assert [(pp.prime, pp.exponent, pp.value) for pp in f.factors] == [
            (2, 2, 4),
            (3, 1, 3),
        ]

    def test_one_has_no_components(self):
        assert numeric.factor_prime_powers(1).factors == ()
        assert numeric.factor_prime_powers(1).value == 1

    def test_360_matches_trial_division(self):
        f = numeric.factor_prime_powers(360)
        assert [(pp.prime, pp.exponent, pp.value) for pp in f.factors] == [
            (2, 3, 8),
            (3, 2, 9),
            (5, 1, 5),
        ]
        assert [(pp.prime, pp.exponent, pp.value) for pp in f.factors] == (
            trial_division_powers(360)
        )

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            numeric.factor_prime_powers(0)

    @given(st.integers(min_value=1, max_value=100_000))
    def test_components_multiply_back(self, q):
        f = numeric.factor_prime_powers(q)
        assert f.value == q
        primes = [pp.prime for pp in f.factors]
        assert primes == sorted(primes) and len(set(primes)) == len(primes)
        assert all(pp.exponent >= 1 for pp in f.factors)


class TestDeltaNabla:
    def test_examples(self):
        assert numeric.delta(12, 2) == 12
        assert numeric.delta(12, 4) == 3
        assert numeric.nabla(12, 6) == 3
        assert numeric.nabla(12, 12) == 12

    @given(st.integers(min_value=2, max_value=1000))
    def test_k_equals_one(self, q):
        assert numeric.delta(q, 1) == q
        assert numeric.nabla(q, 1) == 1

    @given(
        st.integers(min_value=1, max_value=1000),
        st.integers(min_value=1, max_value=1000),
    )
    def test_split_multiplies_to_q(self, q, k):
        d, v = numeric.delta(q, k), numeric.nabla(q, k)
        assert d * v == q
        assert q % d == 0 and q % v == 0


class TestDivisors:
    def test_examples(self):
        assert numeric.divisors(1) == [1]
        assert numeric.divisors(12) == [1, 2, 3, 4, 6, 12]
        assert numeric.divisors(9) == [1, 3, 9]

    @given(st.integers(min_value=1, max_value=10_000))
    def test_ascending_and_complete(self, m):
        ds = numeric.divisors(m)
        assert ds == sorted(set(ds))
        assert ds == [d for d in range(1, m + 1) if m % d == 0]


class TestResidue:
    def test_examples(self):
        assert numeric.residue(-2, 2) == 0
        assert numeric.residue(5, 3) == 2
        assert numeric.residue(-7, 5) == 3

    @given(st.integers(-10_000, 10_000), st.integers(1, 1000))
    def test_range_divisibility_idempotence(self, n, q):
        r = numeric.residue(n, q)
        assert 0 <= r < q
        assert (r - n) % q == 0
        assert numeric.residue(r, q) == r

    def test_zero_modulus_rejected(self):
        with pytest.raises(ValueError):
            numeric.residue(3, 0)


def test_iverson():
    assert numeric.iverson(True) == 1
    assert numeric.iverson(False) == 0
