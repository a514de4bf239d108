"""Acceptance criteria.

Every check is exact (rational arithmetic); each test prints one
pass/fail line and enforces its runtime budget.
"""

import itertools
import random
import time
from fractions import Fraction

from cdgl import (
    FreePresentation,
    Generator,
    bch,
    build_perp_table,
    homology01,
    load_bundled,
    perp,
    perp_inverse,
    two_type_reduce,
)
from cdgl.linalg import rank
from cdgl.simplicial import check_simplicial_identities, check_twisting


def _announce(name, ok, elapsed, budget):
    status = "PASS" if ok else "FAIL"
    print("%s  %-38s %6.2fs (budget %ds)" % (status, name, elapsed, budget))


def test_criterion_1_crossed_module_axioms(crossed_modules):
    start = time.monotonic()
    for name, cm in crossed_modules.items():
        t0 = time.monotonic()
        report = cm.axiom_report(samples=200, seed=0)
        per_example = time.monotonic() - t0
        assert report.ok, (name, report.failures[:3])
        assert per_example < 10, (name, per_example)
    elapsed = time.monotonic() - start
    _announce("1 crossed-module axioms", True, elapsed, 10)


def test_criterion_2_perp_group_suite(presentations):
    start = time.monotonic()
    for name, p in presentations.items():
        left = build_perp_table(p.bracket_bound(), rule="leftmost")
        right = build_perp_table(p.bracket_bound(), rule="rightmost")
        rng = random.Random(0)
        zero = p.zero()
        d = p.differential
        _, cycles = homology01(p)
        for _ in range(200):
            a = p.random_element(1, rng)
            b = p.random_element(1, rng)
            c = p.random_element(1, rng)
            ab = perp(a, b, p, left)
            # group laws
            assert perp(ab, c, p, left) == perp(a, perp(b, c, p, left), p, left)
            assert perp(a, zero, p, left) == a and perp(zero, a, p, left) == a
            assert perp(a, perp_inverse(a, p, left), p, left).is_zero
            # defining differential property
            assert d(ab) == bch(d(a), d(b), p)
            # rule independence
            assert ab == perp(a, b, p, right)
            # cycle case: on ker d the product is plain addition
            za = zero
            zb = zero
            for v in cycles:
                za = za + v.scale(rng.randint(-2, 2))
                zb = zb + v.scale(rng.randint(-2, 2))
            assert perp(za, zb, p, left) == za + zb
    elapsed = time.monotonic() - start
    assert elapsed < 10, elapsed
    _announce("2 perp group suite", True, elapsed, 10)


def _tensor_words(max_len):
    words = [()]
    for n in range(1, max_len + 1):
        words.extend(itertools.product((0, 1), repeat=n))
    return words


def _columns(poly, words, index, max_len):
    """Sparse columns of left multiplication by `poly` on the truncated
    tensor algebra."""
    cols = []
    for w in words:
        col = {}
        room = max_len - len(w)
        for u, c in poly.items():
            if len(u) <= room:
                col[index[u + w]] = c
        cols.append(col)
    return cols


def _matmul(a_cols, b_cols):
    out = []
    for b in b_cols:
        col = {}
        for j, c in b.items():
            for i, v in a_cols[j].items():
                s = col.get(i, 0) + c * v
                if s:
                    col[i] = s
                else:
                    del col[i]
        out.append(col)
    return out


def _mat_identity(n):
    return [{i: Fraction(1)} for i in range(n)]


def _mat_add_scaled(a_cols, b_cols, s):
    out = []
    for a, b in zip(a_cols, b_cols):
        col = dict(a)
        for i, v in b.items():
            t = col.get(i, 0) + s * v
            if t:
                col[i] = t
            else:
                col.pop(i, None)
        out.append(col)
    return out


def test_criterion_3_bch_matrix_oracle():
    start = time.monotonic()
    p = FreePresentation([Generator("x", 0), Generator("y", 0)], truncation=4)
    words = _tensor_words(4)
    index = {w: i for i, w in enumerate(words)}
    n = len(words)
    assert n == 31
    rng = random.Random(0)
    for _ in range(100):
        a = p.random_element(0, rng)
        b = p.random_element(0, rng)
        ra = _columns(p.to_tensor(a), words, index, 4)
        rb = _columns(p.to_tensor(b), words, index, 4)

        def expm(m):
            out = _mat_identity(n)
            power = _mat_identity(n)
            fact = 1
            for k in range(1, 5):
                power = _matmul(m, power)
                fact *= k
                out = _mat_add_scaled(out, power, Fraction(1, fact))
            return out

        def logm(m):
            nil = _mat_add_scaled(m, _mat_identity(n), Fraction(-1))
            out = [dict() for _ in range(n)]
            power = _mat_identity(n)
            for k in range(1, 5):
                power = _matmul(nil, power)
                out = _mat_add_scaled(out, power, Fraction((-1) ** (k + 1), k))
            return out

        lhs = logm(_matmul(expm(ra), expm(rb)))
        rhs = _columns(p.to_tensor(bch(a, b, p)), words, index, 4)
        assert lhs == rhs
    elapsed = time.monotonic() - start
    assert elapsed < 30, elapsed
    _announce("3 BCH matrix-log oracle", True, elapsed, 30)


def test_criterion_4_simplicial_identity_suites(realizations):
    start = time.monotonic()
    for name, r in realizations.items():
        for suite, face, deg, eq, sampler in (
            ("nerve", r.nerve.face, r.nerve.degeneracy, r.nerve.eq, r.nerve.random_element),
            ("classifying", r.wbar.face, r.wbar.degeneracy, r.wbar.eq, r.wbar.random_element),
            ("realization", r.face, r.degeneracy, r.eq, r.random_simplex),
        ):
            report = check_simplicial_identities(
                face, deg, eq, sampler, max_level=4, samples_per_level=50, seed=0,
                suite="%s-%s" % (name, suite),
            )
            assert report.ok, (name, suite, report.failures[:3])
    elapsed = time.monotonic() - start
    assert elapsed < 60, elapsed
    _announce("4 simplicial identity suites", True, elapsed, 60)


def test_criterion_5_twisting_suite(realizations):
    start = time.monotonic()
    for name, r in realizations.items():
        report = check_twisting(
            r.twisting(), r.random_simplex, max_level=4, samples_per_level=50, seed=0
        )
        assert report.ok, (name, report.failures[:3])
    elapsed = time.monotonic() - start
    assert elapsed < 60, elapsed
    _announce("5 twisting identities", True, elapsed, 60)


def test_criterion_6_main_theorem(realizations):
    start = time.monotonic()
    for name, r in realizations.items():
        rng = random.Random(0)
        w_space = r.wbar
        for level in (1, 2, 3, 4):
            for _ in range(100):
                x = r.random_simplex(level, rng)
                image = r.phi(x)
                assert r.eq(r.phi_inverse(image), x), (name, level)
                for i in range(level + 1):
                    assert w_space.eq(r.phi(r.face(i, x)), w_space.face(i, image))
                    assert w_space.eq(
                        r.phi(r.degeneracy(i, x)), w_space.degeneracy(i, image)
                    )
                w = w_space.random_element(level, rng)
                assert w_space.eq(r.phi(r.phi_inverse(w)), w), (name, level)
    elapsed = time.monotonic() - start
    assert elapsed < 120, elapsed
    _announce("6 level-wise isomorphism", True, elapsed, 120)


def test_criterion_7_interval_model():
    from cdgl import ls_interval_check

    start = time.monotonic()
    report, series = ls_interval_check(8)
    assert report.ok, report.failures
    elapsed = time.monotonic() - start
    assert elapsed < 60, elapsed
    _announce("7 interval d^2 = 0 (length 8)", True, elapsed, 60)


def test_criterion_8_two_type_reduction():
    start = time.monotonic()
    p = load_bundled("two-type")
    reduced, qmap = two_type_reduce(p)
    assert reduced.degrees_present() <= {0, 1}

    # the morphism property over every basis pair is re-verified here
    for gi in p.generators:
        ei = p.gen(gi.name)
        assert qmap(p.differential(ei)) == reduced.differential(qmap(ei))
        for gj in p.generators:
            ej = p.gen(gj.name)
            assert qmap(p.bracket(ei, ej)) == reduced.bracket(qmap(ei), qmap(ej))

    # homology dimensions of the input, by exact ranks
    def diff_rows(degree):
        return [
            p.coords(p.differential(p.gen(p.generators[i].name)))
            for i in p.basis_keys(degree)
        ]

    rank_d1 = rank(diff_rows(1))
    rank_d2 = rank(diff_rows(2))
    h0_in = len(p.basis_keys(0)) - rank_d1
    h1_in = len(p.basis_keys(1)) - rank_d1 - rank_d2
    h0_out, h1_out = homology01(reduced)
    assert (len(h0_out), len(h1_out)) == (h0_in, h1_in)
    elapsed = time.monotonic() - start
    assert elapsed < 5, elapsed
    _announce("8 two-type reduction", True, elapsed, 5)
