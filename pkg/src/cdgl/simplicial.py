"""Simplicial machinery: the nerve of a categorical group, the
classifying construction on it, identity checkers, and twisting
functions.

Level sets live over infinite groups, so simplicial objects are realized
lazily: elements are explicit tuples and the checkers draw random
elements from user-supplied samplers instead of enumerating levels.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .algebra import GradedLieElement
from .crossed import Arrow, CategoricalGroup
from .errors import DomainError
from .reports import SuiteReport


@dataclass(frozen=True)
class NerveElement:
    """A level-k nerve element: k arrows stored ascending (m_1, ..., m_k)
    together with the target object n of the innermost arrow.

    The arrow chain it encodes is g_i = (m_i, n_i) with n_1 = n and
    n_{i+1} = d(m_i) * n_i; adjacent arrows are composable.
    """

    level: int
    ms: tuple[GradedLieElement, ...]
    n: GradedLieElement

    def __post_init__(self):
        if len(self.ms) != self.level:
            raise DomainError("nerve element at level %d needs %d arrow parts" % (self.level, self.level))


class Nerve:
    """The simplicial group Ner_k = M^k x N of a categorical group."""

    def __init__(self, cat: CategoricalGroup):
        self.cat = cat
        self.cm = cat.crossed

    # -- chains -----------------------------------------------------------

    def objects(self, x: NerveElement) -> list[GradedLieElement]:
        """The objects n_1, ..., n_{k+1} along the chain."""
        out = [x.n]
        for m in x.ms:
            out.append(self.cm.n_mul(self.cm.boundary(m), out[-1]))
        return out

    def arrows(self, x: NerveElement) -> list[Arrow]:
        ns = self.objects(x)
        return [(m, ns[i]) for i, m in enumerate(x.ms)]

    def from_arrows(self, arrows: Sequence[Arrow]) -> NerveElement:
        """Inverse identification; checks the chain is composable."""
        if not arrows:
            raise DomainError("use identity(0) for the empty chain")
        ns = self.objects(NerveElement(len(arrows), tuple(m for m, _ in arrows), arrows[0][1]))
        for (m, n), expected in zip(arrows, ns):
            if n != expected:
                raise DomainError("arrow chain is not composable")
        return NerveElement(len(arrows), tuple(m for m, _ in arrows), arrows[0][1])

    # -- group structure --------------------------------------------------

    def identity(self, level: int) -> NerveElement:
        return NerveElement(level, tuple(self.cm.m_identity() for _ in range(level)), self.cm.n_identity())

    def product(self, x: NerveElement, y: NerveElement) -> NerveElement:
        if x.level != y.level:
            raise DomainError("nerve product needs equal levels")
        ns = self.objects(x)
        ms = tuple(
            self.cm.m_mul(mx, self.cm.act(ns[i], my)) for i, (mx, my) in enumerate(zip(x.ms, y.ms))
        )
        return NerveElement(x.level, ms, self.cm.n_mul(x.n, y.n))

    def inverse(self, x: NerveElement) -> NerveElement:
        ns = self.objects(x)
        ms = tuple(
            self.cm.act(self.cm.n_inv(ns[i]), self.cm.m_inv(m)) for i, m in enumerate(x.ms)
        )
        return NerveElement(x.level, ms, self.cm.n_inv(x.n))

    def eq(self, x: NerveElement, y: NerveElement) -> bool:
        return x.level == y.level and x.n == y.n and all(a == b for a, b in zip(x.ms, y.ms))

    # -- simplicial structure ---------------------------------------------

    def face(self, i: int, x: NerveElement) -> NerveElement:
        k = x.level
        if not 0 <= i <= k or k < 1:
            raise DomainError("face index %d out of range at level %d" % (i, k))
        ms = x.ms
        if i == 0:
            return NerveElement(k - 1, ms[1:], self.cm.n_mul(self.cm.boundary(ms[0]), x.n))
        if i == k:
            return NerveElement(k - 1, ms[:-1], x.n)
        merged = self.cm.m_mul(ms[i], ms[i - 1])
        return NerveElement(k - 1, ms[: i - 1] + (merged,) + ms[i + 1 :], x.n)

    def degeneracy(self, i: int, x: NerveElement) -> NerveElement:
        k = x.level
        if not 0 <= i <= k:
            raise DomainError("degeneracy index %d out of range at level %d" % (i, k))
        ms = x.ms[:i] + (self.cm.m_identity(),) + x.ms[i:]
        return NerveElement(k + 1, ms, x.n)

    # -- sampling ---------------------------------------------------------

    def random_element(self, level: int, rng: random.Random) -> NerveElement:
        return NerveElement(
            level,
            tuple(self.cm.random_m(rng) for _ in range(level)),
            self.cm.random_n(rng),
        )


@dataclass(frozen=True)
class WBarElement:
    """A level-k classifying-space simplex: components (h_{k-1}, ..., h_0)
    with h_i a nerve element of level i, stored top level first."""

    level: int
    hs: tuple[NerveElement, ...]

    def __post_init__(self):
        if len(self.hs) != self.level:
            raise DomainError("classifying element at level %d needs %d components" % (self.level, self.level))
        for pos, h in enumerate(self.hs):
            if h.level != self.level - 1 - pos:
                raise DomainError("component levels must decrease strictly from level-1 to 0")


class WBar:
    """The classifying simplicial set of a simplicial group (here, a
    nerve), with the twisted face in position 0."""

    def __init__(self, nerve: Nerve):
        self.nerve = nerve

    def identity(self, level: int) -> WBarElement:
        return WBarElement(level, tuple(self.nerve.identity(level - 1 - i) for i in range(level)))

    def eq(self, x: WBarElement, y: WBarElement) -> bool:
        return x.level == y.level and all(self.nerve.eq(a, b) for a, b in zip(x.hs, y.hs))

    def face(self, i: int, x: WBarElement) -> WBarElement:
        k = x.level
        if not 0 <= i <= k or k < 1:
            raise DomainError("face index %d out of range at level %d" % (i, k))
        hs = x.hs
        if i == 0:
            return WBarElement(k - 1, hs[1:])
        if i == k:
            return WBarElement(k - 1, tuple(self.nerve.face(k - 1 - pos, h) for pos, h in enumerate(hs[:-1])))
        # components h_{k-1}..h_{k-i+1} get faces d_{i-1}..d_1; then
        # d_0 h_{k-i} is multiplied onto h_{k-i-1}; the tail is untouched.
        out = [self.nerve.face(i - 1 - pos, h) for pos, h in enumerate(hs[: i - 1])]
        merged = self.nerve.product(self.nerve.face(0, hs[i - 1]), hs[i])
        out.append(merged)
        out.extend(hs[i + 1 :])
        return WBarElement(k - 1, tuple(out))

    def degeneracy(self, i: int, x: WBarElement) -> WBarElement:
        k = x.level
        if not 0 <= i <= k:
            raise DomainError("degeneracy index %d out of range at level %d" % (i, k))
        hs = x.hs
        out = [self.nerve.degeneracy(i - 1 - pos, h) for pos, h in enumerate(hs[:i])]
        out.append(self.nerve.identity(k - i))
        out.extend(hs[i:])
        return WBarElement(k + 1, tuple(out))

    def random_element(self, level: int, rng: random.Random) -> WBarElement:
        return WBarElement(
            level,
            tuple(self.nerve.random_element(level - 1 - i, rng) for i in range(level)),
        )

    def tau(self, x: WBarElement) -> NerveElement:
        """The canonical twisting function of the identity map: project
        onto the top component."""
        if x.level < 1:
            raise DomainError("tau needs level >= 1")
        return x.hs[0]


# -- identity checkers ---------------------------------------------------


def check_simplicial_identities(
    face: Callable[[int, object], object],
    degeneracy: Callable[[int, object], object],
    eq: Callable[[object, object], bool],
    sampler: Callable[[int, random.Random], object],
    max_level: int,
    samples_per_level: int = 10,
    seed: int = 0,
    suite: str = "simplicial-identities",
) -> SuiteReport:
    """Verify the five simplicial identity families on sampled simplices.

    d_i d_j = d_{j-1} d_i (i < j); d_i s_j = s_{j-1} d_i (i < j);
    d_j s_j = id = d_{j+1} s_j; d_i s_j = s_j d_{i-1} (i > j + 1);
    s_i s_j = s_{j+1} s_i (i <= j).
    """
    report = SuiteReport(suite, seed=seed)
    rng = random.Random(seed)
    for level in range(1, max_level + 1):
        for sample in range(samples_per_level):
            x = sampler(level, rng)
            witness = "level %d sample %d" % (level, sample)
            if level >= 2:
                for j in range(level + 1):
                    for i in range(j):
                        lhs = face(i, face(j, x))
                        rhs = face(j - 1, face(i, x))
                        report.record(eq(lhs, rhs), "d%d d%d" % (i, j), witness)
            for j in range(level + 1):
                sx = degeneracy(j, x)
                report.record(eq(face(j, sx), x), "d%d s%d" % (j, j), witness)
                report.record(eq(face(j + 1, sx), x), "d%d s%d" % (j + 1, j), witness)
                for i in range(j):
                    report.record(
                        eq(face(i, sx), degeneracy(j - 1, face(i, x))),
                        "d%d s%d" % (i, j),
                        witness,
                    )
                for i in range(j + 2, level + 2):
                    report.record(
                        eq(face(i, sx), degeneracy(j, face(i - 1, x))),
                        "d%d s%d" % (i, j),
                        witness,
                    )
                for i in range(j + 1):
                    report.record(
                        eq(degeneracy(i, sx), degeneracy(j + 1, degeneracy(i, x))),
                        "s%d s%d" % (i, j),
                        witness,
                    )
    return report


@dataclass
class TwistingFunction:
    """A family tau_k from a simplicial set into a nerve, with the data
    needed to check the four twisting identities."""

    domain_face: Callable[[int, object], object]
    domain_degeneracy: Callable[[int, object], object]
    tau: Callable[[object], NerveElement]
    nerve: Nerve


def check_twisting(
    twisting: TwistingFunction,
    sampler: Callable[[int, random.Random], object],
    max_level: int,
    samples_per_level: int = 10,
    seed: int = 0,
    suite: str = "twisting-identities",
) -> SuiteReport:
    """Verify d_0 tau x = tau(d_1 x) . (tau d_0 x)^-1, d_i tau x =
    tau d_{i+1} x for i > 0, s_i tau x = tau s_{i+1} x, and
    tau s_0 x = identity, on sampled simplices."""
    report = SuiteReport(suite, seed=seed)
    rng = random.Random(seed)
    nerve = twisting.nerve
    for level in range(1, max_level + 1):
        for sample in range(samples_per_level):
            x = sampler(level, rng)
            tx = twisting.tau(x)
            witness = "level %d sample %d" % (level, sample)
            if level >= 2:
                lhs = nerve.face(0, tx)
                rhs = nerve.product(
                    twisting.tau(twisting.domain_face(1, x)),
                    nerve.inverse(twisting.tau(twisting.domain_face(0, x))),
                )
                report.record(nerve.eq(lhs, rhs), "d0-twist", witness)
                for i in range(1, level):
                    report.record(
                        nerve.eq(nerve.face(i, tx), twisting.tau(twisting.domain_face(i + 1, x))),
                        "d%d" % i,
                        witness,
                    )
            for i in range(level):
                report.record(
                    nerve.eq(
                        nerve.degeneracy(i, tx),
                        twisting.tau(twisting.domain_degeneracy(i + 1, x)),
                    ),
                    "s%d" % i,
                    witness,
                )
            report.record(
                nerve.eq(twisting.tau(twisting.domain_degeneracy(0, x)), nerve.identity(level)),
                "tau-s0",
                witness,
            )
    return report


def twisted_map_from_tau(
    twisting: TwistingFunction,
    level_of: Callable[[object], int],
) -> Callable[[object], WBarElement]:
    """The simplicial map into the classifying space determined by a
    twisting function: x |-> (tau x, tau d_0 x, ..., tau d_0^{k-1} x)."""

    def phi(x) -> WBarElement:
        k = level_of(x)
        components = []
        cur = x
        for _ in range(k):
            components.append(twisting.tau(cur))
            cur = twisting.domain_face(0, cur)
        return WBarElement(k, tuple(components))

    return phi
