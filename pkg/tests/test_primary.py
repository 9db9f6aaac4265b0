import math

import pytest
from hypothesis import given, settings, strategies as st

from cayleyff import base_field_new, poly, prime_field
from cayleyff.errors import SizeGuard, UsageError
from cayleyff.primary import (
    count_irreducibles,
    count_primary,
    divisors,
    enumerate_irr_divisors,
    enumerate_irreducibles,
    enumerate_primary,
    export_text,
    mobius,
)

from oracles import irreducibles_by_trial_division


def test_mobius_values():
    assert [mobius(k) for k in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]


def test_pi_small_values():
    assert [count_irreducibles(2, k) for k in (1, 2, 4)] == [2, 1, 3]
    assert [count_irreducibles(3, k) for k in (1, 2)] == [3, 3]
    assert count_irreducibles(2, 12) == 335


def test_primary_counts():
    assert count_primary(2, 1) == 2
    assert count_primary(2, 2) == 3
    assert count_primary(3, 2) == 6
    assert count_primary(9, 2) == 45


def test_enumeration_examples():
    F2, F3 = prime_field(2), prime_field(3)
    assert enumerate_irreducibles(F2, 4) == [(1, 1, 0, 0, 1), (1, 0, 0, 1, 1), (1, 1, 1, 1, 1)]
    assert enumerate_irreducibles(F2, 2) == [(1, 1, 1)]
    assert enumerate_irreducibles(F3, 2) == [(1, 0, 1), (2, 1, 1), (2, 2, 1)]


def test_f9_first_irreducible_quadratics():
    F9 = base_field_new(3, 2)
    assert enumerate_irreducibles(F9, 2)[:3] == [(4, 0, 1), (5, 0, 1), (7, 0, 1)]


def test_primary_records_f2_d2():
    recs = enumerate_primary(prime_field(2), 2)
    assert [r.poly for r in recs] == [(0, 0, 1), (1, 0, 1), (1, 1, 1)]
    assert [r.lam for r in recs] == [1, 1, 2]


@pytest.mark.parametrize("q,m", [(2, 1), (3, 1), (4, 2), (5, 1)])
def test_enumeration_matches_trial_division(q, m):
    p = 2 if q == 4 else q
    F = base_field_new(p, m)
    for k in range(1, 7 if q < 5 else 5):
        got = enumerate_irreducibles(F, k)
        assert got == irreducibles_by_trial_division(F, k)
        assert len(got) == count_irreducibles(F, k)


def test_records_are_radical_powers():
    for F, d in ((prime_field(2), 6), (prime_field(3), 4), (base_field_new(2, 2), 3)):
        recs = enumerate_primary(F, d)
        assert len(recs) == count_primary(F, d) == len(enumerate_irr_divisors(F, d))
        assert len({r.poly for r in recs}) == len(recs)
        for r in recs:
            assert r.poly == poly.power(F, r.radical, d // r.lam)
            assert r.degree == d and len(r.radical) - 1 == r.lam
            assert poly.is_irreducible(F, r.radical)


def test_pi_asymptotics():
    for q, n in ((2, 20), (3, 12), (5, 9)):
        pi = count_irreducibles(q, n)
        assert abs(pi - q**n / n) <= 2 * q ** (n / 2) / n


def test_size_guard_and_degree():
    with pytest.raises(SizeGuard):
        enumerate_irreducibles(prime_field(2), 25)
    with pytest.raises(UsageError):
        enumerate_primary(prime_field(2), 0)


def test_export_text():
    assert export_text(enumerate_primary(prime_field(2), 1)) == "[0,1]\n[1,1]\n"


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9]), st.integers(1, 30))
def test_necklace_identity(q, n):
    # q^n = sum_{k | n} k pi_k
    assert sum(k * count_irreducibles(q, k) for k in divisors(n)) == q**n
