import math
import random

import pytest
from hypothesis import given, strategies as st

from monogenity.errors import ValidationError
from monogenity.intarith import (
    INFINITY,
    binomial_valuation,
    count_monic_irreducibles,
    factorize,
    is_prime,
    is_squarefree,
    moebius,
    valuation,
)
from monogenity.oracle import brute_binomial_valuation, enumerate_monic_irreducibles


class TestValuation:
    def test_162_at_3(self):
        assert valuation(3, 162) == 4

    def test_sign_ignored(self):
        assert valuation(2, -16) == 4

    def test_coprime(self):
        assert valuation(5, 7) == 0

    def test_zero_is_infinity(self):
        assert valuation(3, 0) is INFINITY

    def test_nonprime_rejected(self):
        with pytest.raises(ValidationError):
            valuation(6, 12)

    def test_infinity_ordering(self):
        assert INFINITY > 10**100
        assert not INFINITY < 5
        assert INFINITY >= INFINITY
        assert INFINITY + 3 is INFINITY
        assert 3 + INFINITY is INFINITY

    @given(
        st.sampled_from([2, 3, 5, 7, 11]),
        st.integers(min_value=-(10**6), max_value=10**6).filter(lambda n: n != 0),
        st.integers(min_value=-(10**6), max_value=10**6).filter(lambda n: n != 0),
    )
    def test_multiplicative(self, p, a, b):
        assert valuation(p, a * b) == valuation(p, a) + valuation(p, b)


class TestBinomialValuation:
    def test_spec_values(self):
        assert binomial_valuation(3, 2, 3) == 1  # C(9,3) = 84 = 2^2*3*7
        assert binomial_valuation(2, 4, 8) == 1  # C(16,8) = 12870
        for p, r in [(2, 3), (3, 2), (5, 1), (7, 2)]:
            assert binomial_valuation(p, r, 1) == r

    def test_out_of_range(self):
        with pytest.raises(ValidationError):
            binomial_valuation(3, 2, 0)
        with pytest.raises(ValidationError):
            binomial_valuation(3, 2, 9)

    def test_against_direct_computation(self):
        rng = random.Random(7)
        for _ in range(200):
            p = rng.choice([2, 3, 5, 7])
            r = rng.randint(1, 4)
            j = rng.randint(1, p**r - 1)
            assert binomial_valuation(p, r, j) == brute_binomial_valuation(p, p**r, j)


class TestSquarefree:
    def test_examples(self):
        assert is_squarefree(161)  # 7 * 23
        assert not is_squarefree(80)  # 16 | 80
        assert is_squarefree(-6)

    def test_zero_rejected(self):
        with pytest.raises(ValidationError):
            is_squarefree(0)

    def test_against_sympy_style_definition(self):
        for m in range(2, 500):
            expected = all(m % (q * q) for q in range(2, int(math.isqrt(m)) + 1))
            assert is_squarefree(m) == expected


class TestFactorize:
    def test_small(self):
        assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
        assert factorize(-161) == [(7, 1), (23, 1)]

    def test_large_prime_tail(self):
        assert factorize(2 * 10007) == [(2, 1), (10007, 1)]


class TestCountMonicIrreducibles:
    def test_linear(self):
        for p in (2, 3, 5, 7, 11):
            assert count_monic_irreducibles(p, 1) == p

    def test_spec_values(self):
        assert count_monic_irreducibles(2, 2) == 1
        assert count_monic_irreducibles(3, 2) == 3

    @pytest.mark.parametrize("p", [2, 3, 5])
    @pytest.mark.parametrize("f", [1, 2, 3])
    def test_matches_enumeration(self, p, f):
        assert count_monic_irreducibles(p, f) == enumerate_monic_irreducibles(p, f)

    def test_identities(self):
        rng = random.Random(11)
        for _ in range(40):
            p = rng.choice([2, 3, 5, 7])
            f = rng.randint(1, 8)
            n_f = count_monic_irreducibles(p, f)
            assert f * n_f <= p**f
            divisors = [d for d in range(1, f + 1) if f % d == 0]
            assert sum(d * count_monic_irreducibles(p, d) for d in divisors) == p**f


class TestIsPrime:
    def test_small(self):
        primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
        for n in range(50):
            assert is_prime(n) == (n in primes)

    def test_larger(self):
        assert is_prime(2**61 - 1)
        assert not is_prime(2**67 - 1)

    def test_too_large_rejected(self):
        with pytest.raises(ValidationError):
            is_prime(10**25)

    def test_moebius(self):
        assert [moebius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
