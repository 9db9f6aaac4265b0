import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cayleyff.errors import BadHint, UsageError
from cayleyff.factor import Factorization, factor, format_factorization, is_prime, parse_factorization


def test_examples():
    assert factor(4095).factors == ((3, 2), (5, 1), (7, 1), (13, 1))
    assert factor(80).factors == ((2, 4), (5, 1))
    assert factor(2**61 - 1).factors == ((2**61 - 1, 1),)
    assert str(factor(4095)) == "3^2 * 5^1 * 7^1 * 13^1"


def test_large_mersenne_like():
    N = 2**64 - 1
    assert factor(N).factors == ((3, 1), (5, 1), (17, 1), (257, 1), (641, 1), (65537, 1), (6700417, 1))


def test_rho_splits_semiprime():
    p, q = 1000003, 1000033
    assert factor(p * q).factors == ((p, 1), (q, 1))


def test_hint():
    h = parse_factorization("3^2*5*7*13")
    assert factor(4095, h) is h
    with pytest.raises(BadHint):
        factor(4095, parse_factorization("3*5*7*13"))
    with pytest.raises(BadHint):
        factor(15, Factorization(((15, 1),)))
    with pytest.raises(BadHint):
        parse_factorization("3^x")
    with pytest.raises(UsageError):
        factor(1)


def test_format_roundtrip():
    f = factor(2**12 - 1)
    assert parse_factorization(format_factorization(f).replace(" ", "")) == f


def test_is_prime_small():
    assert [n for n in range(50) if is_prime(n)] == list(sympy.primerange(0, 50))
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 10**15))
def test_factor_matches_sympy(N):
    f = factor(N)
    assert dict(f.factors) == sympy.factorint(N)
    assert f.value == N
    assert all(is_prime(p) for p in f.primes)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11, 16, 25]), st.integers(2, 14))
def test_factor_q_power_minus_one(q, n):
    assert dict(factor(q**n - 1).factors) == sympy.factorint(q**n - 1)
