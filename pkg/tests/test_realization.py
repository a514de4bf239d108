import random
import pytest

from cdgl import ConstructionError, DomainError
from cdgl.simplicial import check_simplicial_identities, check_twisting


def test_random_simplices_satisfy_invariants(realizations):
    for name, r in realizations.items():
        rng = random.Random(0)
        for level in (1, 2, 3, 4):
            x = r.random_simplex(level, rng)
            report = r.validate_simplex(x)
            assert report.ok, (name, level, report.failures[:3])


def test_simplex_constructor_checks_invariants(heis_realization):
    r = heis_realization
    rng = random.Random(1)
    x = r.random_simplex(2, rng)
    # shifting an edge by the central generator t breaks the cocycle
    # condition, since no triangle boundary can produce t
    bad_edges = dict(x.edges)
    bad_edges[(0, 2)] = bad_edges[(0, 2)] + r.cm.presentation.gen("t")
    with pytest.raises(ConstructionError):
        r.simplex(2, bad_edges, x.triangles)
    assert r.validate_simplex(x).ok


def test_permuted_index_table(heis_realization):
    # all six orderings of a triangle, against the stored ascending value
    r = heis_realization
    cm = r.cm
    rng = random.Random(2)
    x = r.random_simplex(3, rng)
    i, j, k = 0, 1, 3
    base = x.triangles[(i, j, k)]
    eij = x.edges[(i, j)]
    eik = x.edges[(i, k)]
    act = cm.act
    inv = cm.m_inv
    neg = cm.n_inv
    assert r.triangle(x, i, j, k) == base
    assert r.triangle(x, i, k, j) == inv(base)
    assert r.triangle(x, k, i, j) == act(neg(eik), base)
    assert r.triangle(x, j, i, k) == inv(act(neg(eij), base))
    assert r.triangle(x, j, k, i) == act(neg(eij), base)
    assert r.triangle(x, k, j, i) == inv(act(neg(eik), base))
    with pytest.raises(DomainError):
        r.triangle(x, 0, 0, 1)


def test_edge_orientations(heis_realization):
    r = heis_realization
    rng = random.Random(3)
    x = r.random_simplex(2, rng)
    assert r.edge(x, 1, 0) == r.cm.n_inv(x.edges[(0, 1)])
    assert r.edge(x, 1, 1).is_zero


def test_chart_round_trips(realizations):
    for name, r in realizations.items():
        rng = random.Random(4)
        for level in (1, 2, 3, 4):
            x = r.random_simplex(level, rng)
            e, t = r.psi_coords(x)
            assert r.eq(r.from_psi(level, e, t), x), (name, level, "short-edge")
            e, t = r.phi_coords(x)
            assert r.eq(r.from_phi(level, e, t), x), (name, level, "cone")


def test_realization_simplicial_identities(heis_realization):
    report = check_simplicial_identities(
        heis_realization.face,
        heis_realization.degeneracy,
        heis_realization.eq,
        heis_realization.random_simplex,
        4,
        3,
        seed=5,
    )
    assert report.ok, report.failures[:3]


def test_tau_low_level_formulas(heis_realization):
    r = heis_realization
    cm = r.cm
    rng = random.Random(6)
    f1 = r.random_simplex(1, rng)
    assert r.tau(f1).level == 0 and r.tau(f1).n == f1.edges[(0, 1)]
    f2 = r.random_simplex(2, rng)
    t2 = r.tau(f2)
    assert t2.n == f2.edges[(0, 1)]
    assert t2.ms == (cm.m_inv(f2.triangles[(0, 1, 2)]),)
    f3 = r.random_simplex(3, rng)
    t3 = r.tau(f3)
    assert t3.ms == (
        cm.m_inv(f3.triangles[(0, 1, 2)]),
        cm.m_mul(cm.m_inv(f3.triangles[(0, 1, 3)]), f3.triangles[(0, 1, 2)]),
    )


def test_tau_is_twisting_function(realizations):
    for name, r in realizations.items():
        report = check_twisting(r.twisting(), r.random_simplex, 4, 3, seed=7)
        assert report.ok, (name, report.failures[:3])


def test_phi_commutes_and_round_trips(realizations):
    for name, r in realizations.items():
        rng = random.Random(8)
        w_space = r.wbar
        for level in (1, 2, 3, 4):
            for _ in range(3):
                x = r.random_simplex(level, rng)
                image = r.phi(x)
                assert r.eq(r.phi_inverse(image), x), (name, level)
                for i in range(level + 1):
                    assert w_space.eq(
                        r.phi(r.face(i, x)), w_space.face(i, image)
                    ), (name, level, i)
                    assert w_space.eq(
                        r.phi(r.degeneracy(i, x)), w_space.degeneracy(i, image)
                    ), (name, level, i)
                w = w_space.random_element(level, rng)
                assert w_space.eq(r.phi(r.phi_inverse(w)), w), (name, level)


def test_abelian_edges_difference_rule(realizations):
    # with all brackets zero the BCH product is addition, so the cone
    # chart determines edges by f(ij) = f(0j) - f(0i)
    r = realizations["abelian"]
    rng = random.Random(9)
    x = r.random_simplex(3, rng)
    for i in range(1, 4):
        for j in range(i + 1, 4):
            assert x.edges[(i, j)] == x.edges[(0, j)] - x.edges[(0, i)]


def test_triangle_differential_check(realizations):
    for name, r in realizations.items():
        report = r.triangle_differential_check(level=3, samples=5, seed=10)
        assert report.ok, (name, report.failures[:3])


def test_degeneracy_collapses_to_identities(heis_realization):
    r = heis_realization
    rng = random.Random(11)
    x = r.random_simplex(2, rng)
    s0 = r.degeneracy(0, x)
    assert s0.edges[(0, 1)].is_zero
    assert s0.triangles[(0, 1, 2)].is_zero
    assert s0.edges[(1, 2)] == x.edges[(0, 1)]
    report = r.validate_simplex(s0)
    assert report.ok
