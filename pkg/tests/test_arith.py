from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, strategies as st

from numlore import arith
from numlore.errors import DomainError, NotInvertibleError, ResourceError

from oracles import aliquot, divisors, gcd_by_trial, inverse_by_scan, prime_by_trial


def test_egcd_examples():
    g, x, y = arith.egcd(240, 46)
    assert g == 2 == gcd_by_trial(240, 46)
    assert 240 * x + 46 * y == 2
    assert arith.egcd(7, 0) == (7, 1, 0)
    assert arith.egcd(3, 7)[0] == gcd_by_trial(3, 7) == 1


def test_egcd_zero_zero():
    with pytest.raises(DomainError):
        arith.egcd(0, 0)


def test_egcd_exhaustive():
    for a in range(-200, 201):
        for b in range(-200, 201):
            if a == 0 and b == 0:
                continue
            g, x, y = arith.egcd(a, b)
            assert g > 0 and a * x + b * y == g
            assert a % g == 0 and b % g == 0


def test_egcd_matches_trial_gcd():
    for a in range(0, 60):
        for b in range(1, 60):
            assert arith.egcd(a, b)[0] == gcd_by_trial(a, b)


@pytest.mark.parametrize("a, m, want", [(3, 7, 5), (1, 2, 1), (1, 97, 1), (35, 3, 2)])
def test_mod_inverse_examples(a, m, want):
    assert arith.mod_inverse(a, m) == want == inverse_by_scan(a, m)


def test_mod_inverse_feeds_sunzi_constant():
    assert 35 * arith.mod_inverse(35, 3) == 70


def test_mod_inverse_not_invertible_carries_gcd():
    with pytest.raises(NotInvertibleError) as err:
        arith.mod_inverse(6, 9)
    assert err.value.gcd == 3


def test_mod_inverse_small_modulus():
    with pytest.raises(DomainError):
        arith.mod_inverse(1, 1)


def test_mod_inverse_exhaustive():
    for m in range(2, 501):
        for a in range(m):
            g = arith.egcd(a, m)[0]
            if g == 1:
                r = arith.mod_inverse(a, m)
                assert 0 <= r < m and a * r % m == 1
            else:
                with pytest.raises(NotInvertibleError):
                    arith.mod_inverse(a, m)


def test_mod_inverse_negative_argument():
    assert arith.mod_inverse(-2, 7) == inverse_by_scan(5, 7)


@pytest.mark.parametrize("n, want", [(73727, True), (1, False), (287, False), (2, True), (0, False), (-7, False), (1151, True)])
def test_is_prime_examples(n, want):
    assert arith.is_prime(n) is want


def test_is_prime_agrees_with_trial_division():
    assert [n for n in range(-5, 5000) if arith.is_prime(n)] == [n for n in range(-5, 5000) if prime_by_trial(n)]


@pytest.mark.parametrize("n, want", [(54, [(2, 1), (3, 3)]), (2, [(2, 1)]), (9437056, [(2, 7), (73727, 1)]), (9363584, [(2, 7), (191, 1), (383, 1)])])
def test_factorize_examples(n, want):
    assert arith.factorize(n) == want


@given(st.integers(min_value=2, max_value=10**9))
def test_factorize_reconstructs(n):
    f = arith.factorize(n)
    primes = [p for p, _ in f]
    assert primes == sorted(set(primes))
    assert all(prime_by_trial(p) for p in primes if p < 10**6)
    assert all(e >= 1 for _, e in f)
    assert prod(p**e for p, e in f) == n


def test_factorize_domain():
    with pytest.raises(DomainError):
        arith.factorize(1)


@pytest.mark.parametrize("n, want", [(220, 284), (284, 220), (1, 0), (6, 6)])
def test_proper_divisor_sum_examples(n, want):
    assert arith.proper_divisor_sum(n) == want


def test_proper_divisor_sum_220_by_enumeration():
    assert sum(d for d in range(1, 220) if 220 % d == 0) == 284


def test_proper_divisor_sum_exhaustive():
    for n in range(1, 10001):
        assert arith.proper_divisor_sum(n) == aliquot(n), n


def test_proper_divisor_sum_domain():
    with pytest.raises(DomainError):
        arith.proper_divisor_sum(0)


def test_sieve_examples():
    assert arith.divisor_sum_sieve(10)[1:].tolist() == [0, 1, 1, 3, 1, 6, 1, 7, 4, 8]
    assert arith.divisor_sum_sieve(1)[1:].tolist() == [0]
    t = arith.divisor_sum_sieve(300)
    assert t[220] == 284 and t[284] == 220


def test_sieve_matches_per_number_sum():
    t = arith.divisor_sum_sieve(10000).tolist()
    assert all(t[n] == arith.proper_divisor_sum(n) for n in range(1, 10001))


def test_sieve_fresh_table_each_call():
    a = arith.divisor_sum_sieve(20)
    a[5] = -1
    assert arith.divisor_sum_sieve(20)[5] == 1


@pytest.mark.parametrize("limit", [0, -3, arith.SIEVE_MAX_LIMIT + 1])
def test_sieve_bounds(limit):
    with pytest.raises(ResourceError):
        arith.divisor_sum_sieve(limit)


@pytest.mark.parametrize("n, want", [(54, (3, 2)), (7, (1, 7)), (128, (4, 2)), (1, (1, 1)), (16, (2, 2))])
def test_cube_free_examples(n, want):
    assert arith.cube_free_decompose(n) == want


def test_cube_free_exhaustive():
    for n in range(1, 5001):
        c, m = arith.cube_free_decompose(n)
        assert c**3 * m == n
        # m cube-free and c maximal: no cube k^3 > 1 divides m
        assert all(m % (k**3) for k in range(2, int(round(m ** (1 / 3))) + 2))


def test_cube_free_domain():
    with pytest.raises(DomainError):
        arith.cube_free_decompose(0)


def test_thabit_sized_integers_are_exact():
    n = 64
    r = 9 * 2 ** (2 * n - 1) - 1
    assert r.bit_length() == 131
    assert (r + 1) // 9 == 2**127


_ops = st.sampled_from(["+", "-", "*", "/"])


@given(st.lists(st.tuples(_ops, st.integers(-1000, 1000), st.integers(1, 1000)), min_size=1, max_size=30))
def test_rational_chains_stay_normalized(chain):
    from math import gcd

    x = Fraction(1)
    for op, num, den in chain:
        y = Fraction(num, den)
        if op == "+":
            x += y
        elif op == "-":
            x -= y
        elif op == "*":
            x *= y
        elif y:
            x /= y
        assert x.denominator > 0
        assert gcd(abs(x.numerator), x.denominator) == 1
    if x == 0:
        assert x.numerator == 0 and x.denominator == 1


def test_divisor_oracle_sanity():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
