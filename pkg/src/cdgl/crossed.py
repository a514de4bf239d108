"""Crossed modules and their categorical groups.

For a cdgl concentrated in degrees 0 and 1 the differential
d: (L1, #) -> (L0, *) is a crossed module, with the degree-0 group acting
through the exponential of the adjoint derivation.  Arrows of the
associated categorical group are pairs (m, n) in the semidirect product.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import GradedLieElement, Presentation, _require_homogeneous
from .errors import ComposabilityError, ConstructionError, DomainError
from .groups import (
    UniversalPerpTable,
    bch,
    exp_ad,
    perp,
    perp_inverse,
)
from .reports import SuiteReport

# A G-element (arrow) is a plain pair (m, n): m of degree 1, n of degree 0.
Arrow = tuple[GradedLieElement, GradedLieElement]

DEFAULT_SAMPLE_PAIRS = 200
EXHAUSTIVE_DIM_CAP = 6


@dataclass
class CrossedModule:
    """d: (L1, #) -> (L0, *) with the exp-ad action of L0 on L1."""

    presentation: Presentation
    table: UniversalPerpTable

    # -- the group (L0, *) ----------------------------------------------

    def n_mul(self, x: GradedLieElement, y: GradedLieElement) -> GradedLieElement:
        return bch(x, y, self.presentation)

    def n_inv(self, x: GradedLieElement) -> GradedLieElement:
        return -x

    def n_identity(self) -> GradedLieElement:
        return self.presentation.zero()

    # -- the group (L1, #) ----------------------------------------------

    def m_mul(self, a: GradedLieElement, b: GradedLieElement) -> GradedLieElement:
        return perp(a, b, self.presentation, self.table)

    def m_inv(self, a: GradedLieElement) -> GradedLieElement:
        return perp_inverse(a, self.presentation, self.table)

    def m_identity(self) -> GradedLieElement:
        return self.presentation.zero()

    # -- boundary and action ---------------------------------------------

    def boundary(self, m: GradedLieElement) -> GradedLieElement:
        _require_homogeneous(m, 1, "boundary argument")
        return self.presentation.differential(m)

    def act(self, n: GradedLieElement, m: GradedLieElement) -> GradedLieElement:
        return exp_ad(n, m, self.presentation)

    # -- sampling ---------------------------------------------------------

    def random_n(self, rng: random.Random) -> GradedLieElement:
        return self.presentation.random_element(0, rng)

    def random_m(self, rng: random.Random) -> GradedLieElement:
        return self.presentation.random_element(1, rng)

    def axiom_report(self, samples: int = DEFAULT_SAMPLE_PAIRS, seed: int = 0) -> SuiteReport:
        """Check both crossed-module axioms: equivariance of the boundary
        and the Peiffer identity.  Exhaustive over basis pairs when the
        dimensions are small, plus random pairs with coefficients in
        {-2..2}."""
        report = SuiteReport("crossed-module-axioms", seed=seed)
        rng = random.Random(seed)
        pairs = []
        deg0 = self.presentation.basis_keys(0)
        deg1 = self.presentation.basis_keys(1)
        if len(deg0) <= EXHAUSTIVE_DIM_CAP and len(deg1) <= EXHAUSTIVE_DIM_CAP:
            one = Fraction(1)
            for i in deg0:
                for j in deg1:
                    pairs.append(
                        (
                            self.presentation.element({i: one}),
                            self.presentation.element({j: one}),
                        )
                    )
        for _ in range(samples):
            pairs.append((self.random_n(rng), self.random_m(rng)))

        for n, m in pairs:
            lhs = self.boundary(self.act(n, m))
            rhs = self.n_mul(self.n_mul(n, self.boundary(m)), self.n_inv(n))
            report.record(
                lhs == rhs,
                "equivariance",
                "n=%s m=%s" % (n.format(), m.format()),
                "d(^n m) != n * d(m) * n^-1",
            )
        rng2 = random.Random(seed + 1)
        mpairs = [(self.random_m(rng2), self.random_m(rng2)) for _ in range(samples)]
        for m, m2 in mpairs:
            lhs = self.act(self.boundary(m), m2)
            rhs = self.m_mul(self.m_mul(m, m2), self.m_inv(m))
            report.record(
                lhs == rhs,
                "peiffer",
                "m=%s m'=%s" % (m.format(), m2.format()),
                "^{d m} m' != m # m' # m^-1",
            )
        return report


def crossed_from_cdgl(
    presentation: Presentation,
    table: UniversalPerpTable,
    samples: int = 25,
    seed: int = 0,
) -> CrossedModule:
    """Build the crossed module of a validated degree-{0,1} presentation,
    verifying both axioms on a sample before returning."""
    if not presentation.degrees_present() <= {0, 1}:
        raise DomainError("crossed module needs a presentation concentrated in degrees {0,1}")
    cm = CrossedModule(presentation, table)
    report = cm.axiom_report(samples=samples, seed=seed)
    if not report.ok:
        first = report.failures[0]
        raise ConstructionError(
            "crossed-module axiom %s failed on %s (upstream bracket/table bug)"
            % (first.kind, first.witness)
        )
    return cm


@dataclass
class CategoricalGroup:
    """Group of arrows M x| N with source and target homomorphisms."""

    crossed: CrossedModule

    def mul(self, a: Arrow, b: Arrow) -> Arrow:
        (m1, n1), (m2, n2) = a, b
        cm = self.crossed
        return (cm.m_mul(m1, cm.act(n1, m2)), cm.n_mul(n1, n2))

    def inv(self, a: Arrow) -> Arrow:
        m, n = a
        cm = self.crossed
        ninv = cm.n_inv(n)
        return (cm.act(ninv, cm.m_inv(m)), ninv)

    def identity(self) -> Arrow:
        cm = self.crossed
        return (cm.m_identity(), cm.n_identity())

    def eq(self, a: Arrow, b: Arrow) -> bool:
        return a[0] == b[0] and a[1] == b[1]

    def source(self, a: Arrow) -> GradedLieElement:
        m, n = a
        cm = self.crossed
        return cm.n_mul(cm.boundary(m), n)

    def target(self, a: Arrow) -> GradedLieElement:
        return a[1]

    def identity_arrow(self, n: GradedLieElement) -> Arrow:
        return (self.crossed.m_identity(), n)

    def composable(self, first: Arrow, second: Arrow) -> bool:
        """first after second: t(first) = s(second)."""
        return self.target(first) == self.source(second)

    def compose(self, first: Arrow, second: Arrow) -> Arrow:
        """Composition (m', n') o (m, n) = (m' # m, n), defined when
        n' = d(m) * n."""
        if not self.composable(first, second):
            raise ComposabilityError(
                "arrows not composable: t(first)=%s, s(second)=%s"
                % (self.target(first).format(), self.source(second).format())
            )
        (m1, _n1), (m2, n2) = first, second
        return (self.crossed.m_mul(m1, m2), n2)

    def random_arrow(self, rng: random.Random) -> Arrow:
        return (self.crossed.random_m(rng), self.crossed.random_n(rng))


def categorical_group(crossed: CrossedModule) -> CategoricalGroup:
    return CategoricalGroup(crossed)
