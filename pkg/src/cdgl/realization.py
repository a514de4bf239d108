"""Geometric realization of a degree-{0,1} cdgl.

A level-k simplex of the realization is a cdgl morphism out of the
k-simplex model algebra, and is stored by its values on the canonical
generators: one degree-0 element per edge (i, j) with i < j and one
degree-1 element per triangle (i, j, r) with i < j < r, subject to

  * the cocycle condition  d f(ijr) = f(ij) * f(jr) * f(ir)^-1, and
  * the quotient relation  f(rst) # f(rtv) # f(rsv)^-1 = ^{f(rs)} f(stv)
    for r < s < t < v,

where * is the group law on degree 0, # the one on degree 1, and ^ the
exponential action.  Values on permuted or repeated index triples are
derived, not stored.

Two coordinate systems parameterize such simplices freely: the
"short-edge" chart (edges (r, r+1) and triangles (r, r+1, s)) and the
"cone" chart (edges (0, i) and triangles (0, j, r)).  The twisting
function tau and the level-wise bijection phi into the classifying
space of the crossed module live here too.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import GradedLieElement
from .crossed import CrossedModule
from .errors import ConstructionError, DomainError
from .reports import SuiteReport
from .simplicial import Nerve, NerveElement, TwistingFunction, WBar, WBarElement
from .crossed import categorical_group


@dataclass(frozen=True)
class RealizationSimplex:
    """Values of a simplex on all ascending edges and triangles."""

    level: int
    edges: dict[tuple[int, int], GradedLieElement]
    triangles: dict[tuple[int, int, int], GradedLieElement]

    def __post_init__(self):
        k = self.level
        want_edges = {(i, j) for j in range(k + 1) for i in range(j)}
        want_tris = {
            (i, j, r) for r in range(k + 1) for j in range(r) for i in range(j)
        }
        if set(self.edges) != want_edges or set(self.triangles) != want_tris:
            raise DomainError("simplex at level %d has wrong edge/triangle index sets" % k)


def _parity(perm: tuple[int, ...]) -> int:
    """0 for even, 1 for odd permutations of three distinct values."""
    inv = sum(
        1
        for a in range(len(perm))
        for b in range(a + 1, len(perm))
        if perm[a] > perm[b]
    )
    return inv % 2


class Realization:
    """The simplicial set of realization simplices of a crossed module,
    together with tau and the map phi into the classifying space."""

    def __init__(self, crossed: CrossedModule):
        self.cm = crossed
        self.cat = categorical_group(crossed)
        self.nerve = Nerve(self.cat)
        self.wbar = WBar(self.nerve)

    # -- derived values on arbitrary index tuples -------------------------

    def edge(self, x: RealizationSimplex, p: int, q: int) -> GradedLieElement:
        if p == q:
            return self.cm.n_identity()
        if p < q:
            return x.edges[(p, q)]
        return self.cm.n_inv(x.edges[(q, p)])

    def triangle(self, x: RealizationSimplex, p: int, q: int, u: int) -> GradedLieElement:
        """Value on a permuted triple: act by the inverse edge from the
        least vertex to the leading one, and take the #-inverse exactly
        for odd permutations of the ascending triple."""
        if len({p, q, u}) != 3:
            raise DomainError("triangle needs three distinct vertices")
        i, j, r = sorted((p, q, u))
        value = x.triangles[(i, j, r)]
        if p != i:
            value = self.cm.act(self.cm.n_inv(self.edge(x, i, p)), value)
        if _parity((p, q, u)) != _parity((i, j, r)):
            value = self.cm.m_inv(value)
        return value

    # -- invariants -------------------------------------------------------

    def validate_simplex(self, x: RealizationSimplex) -> SuiteReport:
        report = SuiteReport("realization-invariants")
        k = x.level
        cm = self.cm
        for (i, j, r), t in sorted(x.triangles.items()):
            lhs = cm.boundary(t)
            rhs = cm.n_mul(
                cm.n_mul(x.edges[(i, j)], x.edges[(j, r)]), cm.n_inv(x.edges[(i, r)])
            )
            report.record(lhs == rhs, "cocycle", "(%d,%d,%d)" % (i, j, r))
        for v in range(k + 1):
            for t in range(v):
                for s in range(t):
                    for r in range(s):
                        lhs = cm.m_mul(
                            cm.m_mul(x.triangles[(r, s, t)], x.triangles[(r, t, v)]),
                            cm.m_inv(x.triangles[(r, s, v)]),
                        )
                        rhs = cm.act(x.edges[(r, s)], x.triangles[(s, t, v)])
                        report.record(lhs == rhs, "quotient", "(%d,%d,%d,%d)" % (r, s, t, v))
        return report

    def simplex(
        self,
        level: int,
        edges: dict[tuple[int, int], GradedLieElement],
        triangles: dict[tuple[int, int, int], GradedLieElement],
        check: bool = True,
    ) -> RealizationSimplex:
        x = RealizationSimplex(level, dict(edges), dict(triangles))
        if check:
            report = self.validate_simplex(x)
            if not report.ok:
                first = report.failures[0]
                raise ConstructionError(
                    "simplex invariant %s fails at %s" % (first.kind, first.witness)
                )
        return x

    def eq(self, x: RealizationSimplex, y: RealizationSimplex) -> bool:
        return x.level == y.level and x.edges == y.edges and x.triangles == y.triangles

    # -- the short-edge chart ---------------------------------------------

    def psi_coords(
        self, x: RealizationSimplex
    ) -> tuple[dict[tuple[int, int], GradedLieElement], dict[tuple[int, int, int], GradedLieElement]]:
        k = x.level
        edges = {(r, r + 1): x.edges[(r, r + 1)] for r in range(k)}
        tris = {
            (r, r + 1, s): x.triangles[(r, r + 1, s)]
            for r in range(k)
            for s in range(r + 2, k + 1)
        }
        return edges, tris

    def from_psi(
        self,
        level: int,
        edges: dict[tuple[int, int], GradedLieElement],
        triangles: dict[tuple[int, int, int], GradedLieElement],
    ) -> RealizationSimplex:
        """Reconstruct the full simplex from the short-edge chart.

        Edges of larger gap come from the cocycle condition,
          f(r, r+g) = d f(r, r+1, r+g)^-1 * f(r, r+1) * f(r+1, r+g),
        and triangles of larger leading gap from the quotient relation,
          f(r, r+g, t) = ^{f(r, r+1)} ( f(r+1, r, r+g) # f(r+1, r+g, t)
                                        # f(r+1, t, r) ).
        """
        cm = self.cm
        k = level
        want_edges = {(r, r + 1) for r in range(k)}
        want_tris = {(r, r + 1, s) for r in range(k) for s in range(r + 2, k + 1)}
        if set(edges) != want_edges or set(triangles) != want_tris:
            raise DomainError("short-edge chart has wrong index sets for level %d" % k)
        full_edges = dict(edges)
        full_tris = dict(triangles)
        for g in range(2, k + 1):
            for r in range(k + 1 - g):
                t = full_tris[(r, r + 1, r + g)]
                full_edges[(r, r + g)] = cm.n_mul(
                    cm.n_mul(cm.n_inv(cm.boundary(t)), full_edges[(r, r + 1)]),
                    full_edges[(r + 1, r + g)],
                )
        for g in range(2, k + 1):
            for r in range(k + 1 - g):
                e01 = full_edges[(r, r + 1)]
                inv_act = cm.n_inv(e01)
                # f(r+1, r, r+g): leading gap 1 triple, odd permutation.
                a = cm.m_inv(cm.act(inv_act, full_tris[(r, r + 1, r + g)]))
                for tv in range(r + g + 1, k + 1):
                    b = full_tris[(r + 1, r + g, tv)]
                    # f(r+1, tv, r): even permutation of (r, r+1, tv).
                    c = cm.act(inv_act, full_tris[(r, r + 1, tv)])
                    full_tris[(r, r + g, tv)] = cm.act(
                        e01, cm.m_mul(cm.m_mul(a, b), c)
                    )
        return RealizationSimplex(k, full_edges, full_tris)

    # -- the cone chart ---------------------------------------------------

    def phi_coords(
        self, x: RealizationSimplex
    ) -> tuple[dict[tuple[int, int], GradedLieElement], dict[tuple[int, int, int], GradedLieElement]]:
        k = x.level
        edges = {(0, i): x.edges[(0, i)] for i in range(1, k + 1)}
        tris = {
            (0, j, r): x.triangles[(0, j, r)]
            for j in range(1, k + 1)
            for r in range(j + 1, k + 1)
        }
        return edges, tris

    def from_phi(
        self,
        level: int,
        edges: dict[tuple[int, int], GradedLieElement],
        triangles: dict[tuple[int, int, int], GradedLieElement],
    ) -> RealizationSimplex:
        """Reconstruct the full simplex from the cone chart:
          f(i, j) = f(0, i)^-1 * d f(0, i, j) * f(0, j),
          f(i, j, r) = ^{f(0, i)^-1} ( f(0, i, j) # f(0, j, r)
                                       # f(0, i, r)^-1 ).
        """
        cm = self.cm
        k = level
        want_edges = {(0, i) for i in range(1, k + 1)}
        want_tris = {(0, j, r) for j in range(1, k + 1) for r in range(j + 1, k + 1)}
        if set(edges) != want_edges or set(triangles) != want_tris:
            raise DomainError("cone chart has wrong index sets for level %d" % k)
        full_edges = dict(edges)
        full_tris = dict(triangles)
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                full_edges[(i, j)] = cm.n_mul(
                    cm.n_mul(cm.n_inv(edges[(0, i)]), cm.boundary(triangles[(0, i, j)])),
                    edges[(0, j)],
                )
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                for r in range(j + 1, k + 1):
                    inner = cm.m_mul(
                        cm.m_mul(triangles[(0, i, j)], triangles[(0, j, r)]),
                        cm.m_inv(triangles[(0, i, r)]),
                    )
                    full_tris[(i, j, r)] = cm.act(cm.n_inv(edges[(0, i)]), inner)
        return RealizationSimplex(k, full_edges, full_tris)

    # -- simplicial structure ---------------------------------------------

    def face(self, i: int, x: RealizationSimplex) -> RealizationSimplex:
        k = x.level
        if not 0 <= i <= k or k < 1:
            raise DomainError("face index %d out of range at level %d" % (i, k))

        def delta(j: int) -> int:
            return j if j < i else j + 1

        edges = {
            (p, q): x.edges[(delta(p), delta(q))]
            for q in range(k)
            for p in range(q)
        }
        tris = {
            (p, q, u): x.triangles[(delta(p), delta(q), delta(u))]
            for u in range(k)
            for q in range(u)
            for p in range(q)
        }
        return RealizationSimplex(k - 1, edges, tris)

    def degeneracy(self, i: int, x: RealizationSimplex) -> RealizationSimplex:
        k = x.level
        if not 0 <= i <= k:
            raise DomainError("degeneracy index %d out of range at level %d" % (i, k))

        def sigma(j: int) -> int:
            return j if j <= i else j - 1

        cm = self.cm
        edges = {}
        for q in range(k + 2):
            for p in range(q):
                sp, sq = sigma(p), sigma(q)
                edges[(p, q)] = x.edges[(sp, sq)] if sp < sq else cm.n_identity()
        tris = {}
        for u in range(k + 2):
            for q in range(u):
                for p in range(q):
                    sp, sq, su = sigma(p), sigma(q), sigma(u)
                    if sp < sq < su:
                        tris[(p, q, u)] = x.triangles[(sp, sq, su)]
                    else:
                        tris[(p, q, u)] = cm.m_identity()
        return RealizationSimplex(k + 1, edges, tris)

    # -- tau and phi ------------------------------------------------------

    def tau(self, x: RealizationSimplex) -> NerveElement:
        """The twisting function: a level-k simplex maps to the nerve
        element with n = f(01), m_1 = f(012)^-1 and
        m_i = f(0, 1, i+1)^-1 # f(0, 1, i) for i >= 2."""
        k = x.level
        if k < 1:
            raise DomainError("tau needs level >= 1")
        cm = self.cm
        n = x.edges[(0, 1)]
        ms = []
        for i in range(1, k):
            top = cm.m_inv(x.triangles[(0, 1, i + 1)])
            if i >= 2:
                top = cm.m_mul(top, x.triangles[(0, 1, i)])
            ms.append(top)
        return NerveElement(k - 1, tuple(ms), n)

    def twisting(self) -> TwistingFunction:
        return TwistingFunction(self.face, self.degeneracy, self.tau, self.nerve)

    def phi(self, x: RealizationSimplex) -> WBarElement:
        components = []
        cur = x
        for _ in range(x.level):
            components.append(self.tau(cur))
            cur = self.face(0, cur)
        return WBarElement(x.level, tuple(components))

    def phi_inverse(self, w: WBarElement) -> RealizationSimplex:
        """Invert phi: component hs[l] (of nerve level k-1-l) supplies
        the short-edge chart entries based at vertex l, by unwinding the
        definition of tau."""
        cm = self.cm
        k = w.level
        edges = {}
        tris = {}
        for ell, h in enumerate(w.hs):
            edges[(ell, ell + 1)] = h.n
            prev = None
            for i, m in enumerate(h.ms, start=1):
                cur = cm.m_inv(m)
                if i >= 2:
                    cur = cm.m_mul(prev, cur)
                tris[(ell, ell + 1, ell + i + 1)] = cur
                prev = cur
        return self.from_psi(k, edges, tris)

    def triangle_differential_check(
        self, level: int = 3, samples: int = 10, seed: int = 0
    ) -> SuiteReport:
        """Confirm on random simplices that the boundary of every cached
        triangle is the group word of its three edges,
        d f(ijr) = f(ij) * f(jr) * f(ir)^-1 (no correction term survives
        in the degree-{0,1} quotient)."""
        report = SuiteReport("triangle-differential", seed=seed)
        rng = random.Random(seed)
        cm = self.cm
        for sample in range(samples):
            x = self.random_simplex(level, rng)
            for (i, j, r), t in sorted(x.triangles.items()):
                lhs = cm.boundary(t)
                rhs = cm.n_mul(
                    cm.n_mul(x.edges[(i, j)], x.edges[(j, r)]), cm.n_inv(x.edges[(i, r)])
                )
                report.record(lhs == rhs, "cocycle", "sample %d (%d,%d,%d)" % (sample, i, j, r))
        zero_n = cm.n_identity()
        base = self.simplex(
            2,
            {(i, j): zero_n for j in range(3) for i in range(j)},
            {(0, 1, 2): cm.m_identity()},
            check=False,
        )
        report.record(
            cm.boundary(base.triangles[(0, 1, 2)]) == zero_n, "cocycle", "basepoint"
        )
        return report

    # -- sampling ---------------------------------------------------------

    def random_simplex(self, level: int, rng: random.Random) -> RealizationSimplex:
        edges = {(r, r + 1): self.cm.random_n(rng) for r in range(level)}
        tris = {
            (r, r + 1, s): self.cm.random_m(rng)
            for r in range(level)
            for s in range(r + 2, level + 1)
        }
        return self.from_psi(level, edges, tris)
