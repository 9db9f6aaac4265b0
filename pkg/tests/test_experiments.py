import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cayleyff import GraphSpec, base_field_new, ext_field_new, factor, prime_field
from cayleyff.errors import BudgetExceeded, Disconnected, EllDoesNotDivide, NotApplicable, UsageError
from cayleyff.experiments import (
    SweepGrid,
    connected_fraction,
    connectivity_sweep,
    cor16_applies,
    count_N_ell,
    count_products,
    diameter_bound,
    proof_threshold,
    regime,
    search_disconnected,
    sweep_csv,
    sweep_violations,
    thm15_bound,
    thm9_hypothesis,
    verify_diameter,
)

from oracles import products_by_enumeration

F2, F3 = prime_field(2), prime_field(3)


def test_bound_examples():
    assert thm15_bound(7, 2, 1) == 5.0
    assert thm15_bound(5, 4, 2) == pytest.approx(13.6026, abs=1e-4)
    assert proof_threshold(5, 3, 2) == pytest.approx(5.269, abs=1e-3)
    with pytest.raises(NotApplicable):
        thm15_bound(2, 4, 3)


def test_cor16():
    assert cor16_applies(1024, 2, 1)
    assert not cor16_applies(1024, 3, 1)
    spec = GraphSpec(ext_field_new(prime_field(7), (3, 0, 0, 1)), 2)
    assert diameter_bound(spec) == (pytest.approx(5.659884, abs=1e-6), False)


def test_verify_diameter_examples(f9):
    r = verify_diameter(GraphSpec(f9, 1), factor(8))
    assert (r.D_actual, r.bound, r.threshold, r.ok, r.cor16) == (3, 5.0, 4, True, True)
    r = verify_diameter(GraphSpec(ext_field_new(prime_field(7), (3, 0, 0, 1)), 2), factor(342))
    assert (r.D_actual, r.threshold, r.ok) == (3, 5, True)


def test_verify_diameter_disconnected():
    spec = GraphSpec(ext_field_new(F2, (1, 1, 0, 1, 1, 1, 1, 0, 1)), 1)
    with pytest.raises((Disconnected, NotApplicable)):
        verify_diameter(spec, factor(255))


def test_count_products_match_enumeration(small_specs):
    for spec in small_specs[::2]:
        P = spec.connection.size
        for k in (1, 2, 3):
            if P**k > 5000:
                break
            got = count_products(spec, k)
            assert np.array_equal(got, products_by_enumeration(spec, k))
            assert got.sum() == P**k and got[0] == 0


def test_count_products_recurrence(f16):
    spec = GraphSpec(f16, 2)
    n2 = count_products(spec, 2)
    n3 = count_products(spec, 3)
    ref = np.zeros_like(n3)
    for row in spec.perms:
        ref[row] += n2
    assert np.array_equal(n3, ref)


def test_count_products_guards(f16):
    spec = GraphSpec(f16, 1)
    with pytest.raises(UsageError):
        count_products(spec, 0)
    with pytest.raises(BudgetExceeded):
        count_products(spec, 10, budget=100)
    with pytest.raises(BudgetExceeded):
        count_products(spec, 64)


def test_thm9_hypothesis_examples():
    assert thm9_hypothesis(2, 12, 1, 3)
    assert not thm9_hypothesis(2, 8, 1, 3)
    assert thm9_hypothesis(2, 20, 1, 3)


def test_search_examples():
    r = search_disconnected(F3, 2, 1, 2)
    assert r.hits == [] and r.scanned == 3 and not r.hypothesis
    r = search_disconnected(F2, 8, 1, 3)
    assert [f for f, _ in r.hits] == [(1, 1, 0, 1, 1, 1, 1, 0, 1), (1, 0, 1, 1, 1, 1, 0, 1, 1), (1, 1, 1, 0, 1, 0, 1, 1, 1)]
    assert r.to_json()["hits"][0] == {"f": "[1,1,0,1,1,1,1,0,1]", "components": 3}
    with pytest.raises(EllDoesNotDivide):
        search_disconnected(F2, 4, 1, 4)
    with pytest.raises(BudgetExceeded):
        search_disconnected(F2, 12, 1, 3, budget=10)


def test_search_f2_12():
    r = search_disconnected(F2, 12, 1, 3)
    assert r.hypothesis and r.scanned == 335 and len(r.hits) == 35
    assert all(c % 3 == 0 for _, c in r.hits)


def test_count_N_ell_examples():
    assert count_N_ell(F2, 8, 1, 3) == 24
    assert count_N_ell(F2, 10, 1, 3) == 90
    assert count_N_ell(F2, 12, 1, 3) == 420
    assert count_N_ell(F2, 8, 1, 255) == 0
    with pytest.raises(EllDoesNotDivide):
        count_N_ell(F2, 8, 1, 7)


@pytest.mark.parametrize("p,m,n,d,ell", [(2, 1, 8, 1, 3), (2, 1, 10, 1, 3), (2, 1, 6, 2, 3),
                                         (3, 1, 4, 1, 2), (3, 1, 4, 1, 5), (2, 2, 4, 1, 5)])
def test_count_N_ell_counts_roots_of_hits(p, m, n, d, ell):
    # every beta of degree n is a root of exactly one f, and h(beta) is an
    # ell-th power for all h in I_d iff ell divides the component count for f
    base = base_field_new(p, m)
    r = search_disconnected(base, n, d, ell)
    N_ell = count_N_ell(base, n, d, ell)
    assert N_ell == n * len(r.hits)
    assert N_ell % n == 0


def test_regime():
    assert regime(2, 4, 2, 3) == "gap"
    assert regime(3, 2, 1, 2) == "connected"
    assert regime(2, 12, 1, 3) == "disconnectable"


def test_sweep_small():
    grid = SweepGrid(F2, [4, 6], [1, 2], sample=None)
    rows = connectivity_sweep(grid)
    assert len(rows) == 3 * 2 + 9 * 2
    assert sweep_violations(rows) == []
    text = sweep_csv(rows)
    head, first = text.splitlines()[:2]
    assert head == "q,n,d,f,regime,components,thm14_bound,diameter,diameter_bound,delta_star,seconds"
    assert first == '2,4,1,"[1,1,0,0,1]",gap,1,15,5,,0.000000000,'
    assert "\r" not in text
    frac = connected_fraction(rows)
    assert frac["2,4,1"] == 1.0


def test_sweep_sample_is_seeded():
    grid = SweepGrid(F2, [8], [1], sample=5, seed=7)
    a = [r["f"] for r in connectivity_sweep(grid)]
    b = [r["f"] for r in connectivity_sweep(grid)]
    assert a == b and len(a) == 5


def test_sweep_jobs_match_serial():
    grid = SweepGrid(F3, [3, 4], [1, 2])
    assert sweep_csv(connectivity_sweep(grid, jobs=2)) == sweep_csv(connectivity_sweep(grid))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 8), st.integers(1, 3))
def test_count_products_total(i, k):
    from cayleyff.primary import enumerate_irreducibles

    f = enumerate_irreducibles(F2, 6)[i]
    spec = GraphSpec(ext_field_new(F2, f), 2)
    c = count_products(spec, k)
    assert c.sum() == spec.connection.size**k
