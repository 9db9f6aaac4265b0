import numpy as np
import pytest
from fractions import Fraction

from cayleyff import GraphSpec, build_log_table, eigenvalues, expander_check, ext_field_new, factor, find_generator, prime_field, weil_check
from cayleyff.errors import NotAGenerator, WrongKind
from cayleyff.spectrum import character_sums

from oracles import dense_adjacency


def _table(ext):
    return build_log_table(ext, find_generator(ext, factor(ext.N)))


def test_generator_of_f16_is_alpha(f16):
    t = _table(f16)
    assert t.generator == f16.alpha
    assert t.logs[f16.alpha.index] == 1
    assert t.logs[(f16.alpha + 1).index] == 4  # alpha^4 = alpha + 1
    assert t.logs[0] == -1 and t.logs[1] == 0


def test_not_a_generator(f16):
    with pytest.raises(NotAGenerator):
        build_log_table(f16, f16.alpha**3)


def test_f16_d1_closed_form(f16):
    lam = eigenvalues(GraphSpec(f16, 1), _table(f16)).eigenvalues
    w = np.exp(2j * np.pi * np.arange(15) / 15)
    assert np.allclose(lam, w + w**4, atol=1e-9)


def test_characters_are_eigenvectors(small_specs):
    for spec in small_specs[::3]:
        t = _table(spec.ext)
        for kind in ("unweighted", "weighted"):
            M = dense_adjacency(spec, weighted=kind == "weighted")
            rep = eigenvalues(spec, t, kind)
            logs = t.logs[1:]
            for j in range(0, spec.N, max(1, spec.N // 7)):
                x = np.exp(2j * np.pi * j * logs / spec.N)
                assert np.allclose(M @ x, rep.eigenvalues[j] * x, atol=1e-8)


def test_dense_spectrum_matches(f9, f16):
    for spec in (GraphSpec(f9, 1), GraphSpec(f16, 2)):
        got = np.sort_complex(np.round(eigenvalues(spec, _table(spec.ext)).eigenvalues, 8))
        ref = np.sort_complex(np.round(np.linalg.eigvals(dense_adjacency(spec)), 8))
        assert np.allclose(got, ref, atol=1e-6)


def test_sum_identities(small_specs):
    for spec in small_specs:
        t = _table(spec.ext)
        u = eigenvalues(spec, t)
        P = spec.connection.size
        assert u.trivial_eigenvalue == P
        assert abs(u.eigenvalues[0] - P) < 1e-9
        # Parseval over the character group
        assert abs(np.sum(np.abs(u.eigenvalues) ** 2) - spec.N * P) < 1e-6 * spec.N * P
        w = eigenvalues(spec, t, "weighted")
        assert abs(w.eigenvalues[0] - spec.q**spec.d) < 1e-9
        # the trace of a permutation sum without fixed points is 0
        assert abs(u.eigenvalues.sum()) < 1e-6 * spec.N


def test_trivial_multiplicity_is_component_count():
    spec = GraphSpec(ext_field_new(prime_field(2), (1, 1, 0, 1, 1, 1, 1, 0, 1)), 1)
    rep = eigenvalues(spec, _table(spec.ext))
    assert rep.trivial_multiplicity == 3
    assert rep.subgroup_order == 85
    assert rep.trivial_on_H().sum() == 3


def test_direct_and_transform_agree(small_specs):
    for spec in small_specs:
        t = _table(spec.ext)
        for kind in ("unweighted", "weighted"):
            a = eigenvalues(spec, t, kind, method="direct").eigenvalues
            b = eigenvalues(spec, t, kind, method="transform").eigenvalues
            assert np.max(np.abs(a - b)) <= 1e-6 * max(1.0, np.max(np.abs(a)))


def test_character_sums_tiny():
    lam = character_sums(4, np.array([1]), np.array([1]), "direct")
    assert np.allclose(lam, [1, 1j, -1, -1j])


def test_bounds_hold(small_specs):
    for spec in small_specs:
        t = _table(spec.ext)
        u = eigenvalues(spec, t)
        assert np.abs(u.eigenvalues[1:]).max() <= u.thm17_bound + 1e-6
        assert weil_check(eigenvalues(spec, t, "weighted"), spec).ok


def test_weil_needs_weighted(f16):
    spec = GraphSpec(f16, 1)
    with pytest.raises(WrongKind):
        weil_check(eigenvalues(spec, _table(f16)), spec)
    with pytest.raises(WrongKind):
        eigenvalues(spec, _table(f16), "laplacian")


def test_expander_f81():
    from cayleyff import base_field_new
    from cayleyff.primary import enumerate_irreducibles

    F9 = base_field_new(3, 2)
    ext = ext_field_new(F9, enumerate_irreducibles(F9, 2)[0])
    # n = 2 over F_9 with d = 1: hypothesis n + d - 1 <= 3 (1 - delta) holds for delta <= 1/3
    spec = GraphSpec(ext, 1)
    rep = eigenvalues(spec, _table(ext))
    v = expander_check(rep, spec, Fraction(1, 3))
    assert v.detail["hypothesis_met"] and v.detail["status"] == "pass"
    v = expander_check(rep, spec, "1/2")
    assert v.detail["status"] == "hypothesis-not-met" and not v.ok
    with pytest.raises(ValueError):
        expander_check(rep, spec, 1)


def test_csv_and_summary(f9):
    rep = eigenvalues(GraphSpec(f9, 1), _table(f9))
    rows = rep.to_csv().splitlines()
    assert rows[0] == "j,re,im,abs,trivial_on_H"
    assert rows[1] == "0,3,0,3,1"
    assert len(rows) == 9
    s = rep.summary()
    assert s["trivial_multiplicity"] == 1 and s["method"] == "direct"
