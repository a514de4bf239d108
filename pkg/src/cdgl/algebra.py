"""Graded Lie algebra elements and presentations.

Two presentation styles are supported:

* free-truncated: the free complete graded Lie algebra on named
  generators, truncated at a bracket length.  Elements are stored in the
  Lyndon-bracket basis; normalization goes through the tensor-algebra
  embedding, which keeps the Koszul signs honest.
* structure-constants: a finite basis with an explicit bracket table.

All coefficients are exact rationals; there is no floating point
anywhere in the package.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from . import linalg, tensor
from .errors import DomainError, NotLieElementError, PresentationError
from .lyndon import (
    BracketFactory,
    Generator,
    LyndonBracket,
    is_lyndon,
    lyndon_words,
    pair,
)
from .reports import SuiteReport

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

ScalarLike = Union[int, Fraction]

MAIN_PATH_DEGREES = frozenset({0, 1})
SCRATCH_DEGREES = frozenset({-1, 0, 1, 2})

MIXED = "mixed"


class GradedLieElement:
    """A finite rational linear combination of basis keys of a presentation.

    Immutable by convention: the terms dict is never mutated after
    construction.
    """

    __slots__ = ("presentation", "terms")

    def __init__(self, presentation, terms: Mapping):
        self.presentation = presentation
        self.terms = {k: Fraction(c) for k, c in terms.items() if c}

    # -- linear structure ------------------------------------------------

    def _check_same(self, other: "GradedLieElement") -> None:
        if self.presentation is not other.presentation:
            raise DomainError("elements belong to different presentations")

    def __add__(self, other: "GradedLieElement") -> "GradedLieElement":
        self._check_same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, ZERO) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return GradedLieElement(self.presentation, out)

    def __sub__(self, other: "GradedLieElement") -> "GradedLieElement":
        return self + (-other)

    def __neg__(self) -> "GradedLieElement":
        return GradedLieElement(self.presentation, {k: -c for k, c in self.terms.items()})

    def scale(self, s: ScalarLike) -> "GradedLieElement":
        s = Fraction(s)
        return GradedLieElement(self.presentation, {k: s * c for k, c in self.terms.items()})

    __rmul__ = scale

    def __mul__(self, s: ScalarLike) -> "GradedLieElement":
        return self.scale(s)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedLieElement):
            return NotImplemented
        return self.presentation is other.presentation and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.presentation), frozenset(self.terms.items())))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self):
        """The common degree of all terms, None for 0, or "mixed"."""
        degs = {self.presentation.key_degree(k) for k in self.terms}
        if not degs:
            return None
        if len(degs) == 1:
            return degs.pop()
        return MIXED

    def is_homogeneous(self, degree: int) -> bool:
        return self.is_zero or self.degree == degree

    def __repr__(self) -> str:
        return "<%s>" % self.format()

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=self.presentation.key_sort_key):
            c = self.terms[k]
            name = self.presentation.format_key(k)
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append("-" + name)
            else:
                parts.append("%s*%s" % (c, name))
        return " + ".join(parts).replace("+ -", "- ")


def _require_homogeneous(a: GradedLieElement, degree: int, what: str) -> None:
    if not a.is_homogeneous(degree):
        raise DomainError("%s must be homogeneous of degree %d, got degree %r" % (what, degree, a.degree))


class _PresentationBase:
    """Shared helpers for both presentation styles."""

    generators: tuple[Generator, ...]

    def zero(self) -> GradedLieElement:
        return GradedLieElement(self, {})

    def element(self, terms: Mapping) -> GradedLieElement:
        return GradedLieElement(self, terms)

    def sum(self, elements: Iterable[GradedLieElement]) -> GradedLieElement:
        out = self.zero()
        for e in elements:
            out = out + e
        return out

    def random_element(
        self,
        degree: int,
        rng: random.Random,
        lo: int = -2,
        hi: int = 2,
    ) -> GradedLieElement:
        terms = {k: Fraction(rng.randint(lo, hi)) for k in self.basis_keys(degree)}
        return GradedLieElement(self, terms)

    def degrees_present(self) -> set[int]:
        return {g.degree for g in self.generators}


class FreePresentation(_PresentationBase):
    """Free complete graded Lie algebra on named generators, truncated at
    bracket length `truncation`.

    Brackets of length > truncation are silently zero (we work in
    L / L^{> truncation}); every result is exact for nilpotent algebras
    of class <= truncation.  Degree -1 and 2 generators are admitted in
    scratch algebras only.
    """

    style = "free-truncated"

    def __init__(self, generators: Sequence[Generator], truncation: int, scratch: bool = False):
        names = [g.name for g in generators]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate generator names: %r" % (names,))
        if truncation < 1:
            raise PresentationError("truncation bound must be >= 1")
        allowed = SCRATCH_DEGREES if scratch else MAIN_PATH_DEGREES
        for g in generators:
            if g.degree not in allowed:
                raise PresentationError(
                    "generator %s has degree %d, outside %s for %s presentation"
                    % (g.name, g.degree, sorted(allowed), "scratch" if scratch else "main-path")
                )
        self.generators = tuple(generators)
        self.truncation = truncation
        self.scratch = scratch
        self.degrees = tuple(g.degree for g in generators)
        self._index = {g.name: i for i, g in enumerate(generators)}
        self.factory = BracketFactory(self.degrees)
        self._expansion_cache: dict[LyndonBracket, tensor.TensorPoly] = {}
        self._gen_diffs: list[tensor.TensorPoly] = [tensor.t_zero() for _ in generators]
        self._gen_diff_elements: dict[str, GradedLieElement] = {}

    # -- structure -------------------------------------------------------

    def gen(self, name: str) -> GradedLieElement:
        i = self._index[name]
        return GradedLieElement(self, {self.factory.bracketing((i,)): ONE})

    def key_degree(self, key: LyndonBracket) -> int:
        return key.degree

    def key_sort_key(self, key: LyndonBracket):
        return key.sort_key()

    def format_key(self, key: LyndonBracket) -> str:
        return key.format([g.name for g in self.generators])

    def basis_keys(self, degree: Optional[int] = None) -> list[LyndonBracket]:
        """All basis brackets of length <= truncation (odd-square keys
        included), optionally filtered by degree."""
        keys: list[LyndonBracket] = []
        for w in lyndon_words(len(self.generators), self.truncation):
            b = self.factory.bracketing(w)
            keys.append(b)
            if b.degree % 2 and 2 * len(w) <= self.truncation:
                keys.append(pair(b, b))
        keys.sort(key=lambda k: k.sort_key())
        if degree is not None:
            keys = [k for k in keys if k.degree == degree]
        return keys

    def set_differential(self, mapping: Mapping[str, GradedLieElement]) -> None:
        """Define d on generators; extended everywhere by the Leibniz rule."""
        for name, value in mapping.items():
            i = self._index[name]
            g = self.generators[i]
            if not value.is_zero and value.degree != g.degree - 1:
                raise PresentationError(
                    "d(%s) must have degree %d, got %r" % (name, g.degree - 1, value.degree)
                )
            self._gen_diffs[i] = self.to_tensor(value)
            self._gen_diff_elements[name] = value

    # -- tensor embedding ------------------------------------------------

    def to_tensor(self, a: GradedLieElement) -> tensor.TensorPoly:
        out: tensor.TensorPoly = {}
        for key, c in a.terms.items():
            poly = tensor.expand_bracket(key, self.degrees, self.truncation, self._expansion_cache)
            tensor.t_add_into(out, poly, c)
        return out

    def from_tensor(self, poly: tensor.TensorPoly) -> GradedLieElement:
        """Rewrite a Lie tensor polynomial into the Lyndon-bracket basis.

        Greedy triangular elimination: the expansion of the basis bracket
        of a Lyndon word w is w plus lexicographically larger words, so
        repeatedly stripping the smallest surviving word terminates.
        """
        work = dict(poly)
        out: dict[LyndonBracket, Fraction] = {}
        while work:
            w = min(work, key=lambda u: (len(u), u))
            c = work[w]
            if is_lyndon(w):
                key = self.factory.bracketing(w)
                coeff = c
            else:
                half = len(w) // 2
                v = w[:half]
                if len(w) % 2 == 0 and w == v + v and is_lyndon(v) and self.factory.word_degree(v) % 2:
                    key = self.factory.square(v)
                    coeff = c / 2
                else:
                    raise NotLieElementError(
                        "leading word %r is neither Lyndon nor an odd square" % (w,)
                    )
            out[key] = coeff
            expansion = tensor.expand_bracket(key, self.degrees, self.truncation, self._expansion_cache)
            tensor.t_add_into(work, expansion, -coeff)
        return GradedLieElement(self, out)

    # -- operations ------------------------------------------------------

    def bracket(self, a: GradedLieElement, b: GradedLieElement) -> GradedLieElement:
        if a.presentation is not self or b.presentation is not self:
            raise DomainError("elements not expressible in this presentation")
        poly = tensor.t_commutator(self.to_tensor(a), self.to_tensor(b), self.degrees, self.truncation)
        return self.from_tensor(poly)

    def differential(self, a: GradedLieElement) -> GradedLieElement:
        if a.presentation is not self:
            raise DomainError("element of a different presentation")
        poly = tensor.t_derive(self.to_tensor(a), self._gen_diffs, self.degrees, self.truncation)
        return self.from_tensor(poly)

    def bracket_bound(self) -> int:
        return self.truncation


class StructureConstantsPresentation(_PresentationBase):
    """Finite-dimensional graded Lie algebra given by structure constants.

    The bracket table is completed by graded antisymmetry for pairs given
    in one order only; pairs given in both orders are kept verbatim so
    that validation can flag inconsistencies.  Absent entries are zero
    (in particular every bracket landing outside the presented degrees).
    """

    style = "structure-constants"

    def __init__(
        self,
        basis: Sequence[Generator],
        brackets: Mapping[tuple[str, str], Mapping[str, ScalarLike]] = (),
        differential: Mapping[str, Mapping[str, ScalarLike]] = (),
        nilpotency_class: Optional[int] = None,
        name: str = "",
    ):
        names = [g.name for g in basis]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate basis names: %r" % (names,))
        self.generators = tuple(basis)
        self.name = name
        self._index = {g.name: i for i, g in enumerate(basis)}
        self.degrees = tuple(g.degree for g in basis)
        n = len(basis)

        given: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (ln, rn), value in dict(brackets).items():
            if ln not in self._index or rn not in self._index:
                raise PresentationError("bracket on unknown basis names (%s, %s)" % (ln, rn))
            given[(self._index[ln], self._index[rn])] = {
                self._index[k]: Fraction(c) for k, c in value.items() if Fraction(c)
            }
        self.table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), value in given.items():
            self.table[(i, j)] = value
        for (i, j), value in given.items():
            if (j, i) not in self.table:
                sign = -ONE if (self.degrees[i] * self.degrees[j]) % 2 == 0 else ONE
                self.table[(j, i)] = {k: sign * c for k, c in value.items()}

        self.diff: dict[int, dict[int, Fraction]] = {}
        for dn, value in dict(differential).items():
            if dn not in self._index:
                raise PresentationError("differential on unknown basis name %s" % dn)
            entry = {self._index[k]: Fraction(c) for k, c in value.items() if Fraction(c)}
            if entry:
                self.diff[self._index[dn]] = entry

        self.claimed_class = nilpotency_class
        self._class: Optional[int] = None

    # -- structure -------------------------------------------------------

    def gen(self, name: str) -> GradedLieElement:
        return GradedLieElement(self, {self._index[name]: ONE})

    def key_degree(self, key: int) -> int:
        return self.degrees[key]

    def key_sort_key(self, key: int):
        return key

    def format_key(self, key: int) -> str:
        return self.generators[key].name

    def basis_keys(self, degree: Optional[int] = None) -> list[int]:
        if degree is None:
            return list(range(len(self.generators)))
        return [i for i, d in enumerate(self.degrees) if d == degree]

    def basis_elements(self, degree: Optional[int] = None) -> list[GradedLieElement]:
        return [GradedLieElement(self, {i: ONE}) for i in self.basis_keys(degree)]

    # -- operations ------------------------------------------------------

    def bracket_keys(self, i: int, j: int) -> dict[int, Fraction]:
        return self.table.get((i, j), {})

    def bracket(self, a: GradedLieElement, b: GradedLieElement) -> GradedLieElement:
        if a.presentation is not self or b.presentation is not self:
            raise DomainError("elements not expressible in this presentation")
        out: dict[int, Fraction] = {}
        for i, ca in a.terms.items():
            for j, cb in b.terms.items():
                for k, s in self.bracket_keys(i, j).items():
                    v = out.get(k, ZERO) + ca * cb * s
                    if v:
                        out[k] = v
                    else:
                        out.pop(k, None)
        return GradedLieElement(self, out)

    def differential(self, a: GradedLieElement) -> GradedLieElement:
        if a.presentation is not self:
            raise DomainError("element of a different presentation")
        out: dict[int, Fraction] = {}
        for i, c in a.terms.items():
            for k, s in self.diff.get(i, {}).items():
                v = out.get(k, ZERO) + c * s
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return GradedLieElement(self, out)

    # -- nilpotency ------------------------------------------------------

    def coords(self, a: GradedLieElement) -> list[Fraction]:
        v = [ZERO] * len(self.generators)
        for i, c in a.terms.items():
            v[i] = c
        return v

    def from_coords(self, v: Sequence[Fraction]) -> GradedLieElement:
        return GradedLieElement(self, {i: c for i, c in enumerate(v) if c})

    def lower_central_series(self) -> list[list[list[Fraction]]]:
        """Row bases of L^1 >= L^2 >= ..., stopping at 0."""
        n = len(self.generators)
        current = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        series = [current]
        while True:
            rows: list[list[Fraction]] = []
            for i in range(n):
                e = GradedLieElement(self, {i: ONE})
                for v in series[-1]:
                    w = self.bracket(e, self.from_coords(v))
                    if not w.is_zero:
                        rows.append(self.coords(w))
            basis = linalg.row_space_basis(rows)
            if not basis:
                break
            if len(series) > n + 1:
                break
            series.append(basis)
        return series

    def nilpotency_class(self) -> Optional[int]:
        """Largest c with L^c != 0, or None if the lower central series
        does not vanish (non-nilpotent)."""
        if self._class is None:
            series = self.lower_central_series()
            n = len(self.generators)
            if len(series) > n + 1:
                return None
            self._class = len(series)
        return self._class

    def bracket_bound(self) -> int:
        c = self.nilpotency_class()
        if c is None:
            raise DomainError("presentation is not nilpotent; no exact truncation bound")
        return c


Presentation = Union[FreePresentation, StructureConstantsPresentation]


# -- module-level operations matching the public surface -----------------


def lyndon_basis(generators: Sequence[Generator], max_len: int) -> list[LyndonBracket]:
    """All Lyndon brackets of word length <= max_len over the generators,
    in length-then-lexicographic order."""
    names = [g.name for g in generators]
    if len(set(names)) != len(names):
        raise PresentationError("duplicate generator names: %r" % (names,))
    if max_len < 1:
        raise PresentationError("max_len must be >= 1")
    factory = BracketFactory([g.degree for g in generators])
    return [factory.bracketing(w) for w in lyndon_words(len(generators), max_len)]


def bracket(a: GradedLieElement, b: GradedLieElement, presentation: Presentation) -> GradedLieElement:
    return presentation.bracket(a, b)


def apply_differential(a: GradedLieElement, presentation: Presentation) -> GradedLieElement:
    return presentation.differential(a)


# -- validation ----------------------------------------------------------


def validate_presentation(presentation: Presentation) -> SuiteReport:
    """Exhaustive basis-level check of the presentation invariants."""
    report = SuiteReport("presentation-invariants")
    if isinstance(presentation, StructureConstantsPresentation):
        _validate_structure(presentation, report)
    else:
        _validate_free(presentation, report)
    return report


def _validate_structure(p: StructureConstantsPresentation, report: SuiteReport) -> None:
    n = len(p.generators)
    names = [g.name for g in p.generators]

    def elem(i):
        return GradedLieElement(p, {i: ONE})

    # degree bookkeeping
    for (i, j), value in p.table.items():
        want = p.degrees[i] + p.degrees[j]
        bad = [k for k in value if p.degrees[k] != want]
        report.record(
            not bad,
            "bracket-degree",
            "[%s,%s]" % (names[i], names[j]),
            "terms of wrong degree: %s" % [names[k] for k in bad],
        )
    for i, value in p.diff.items():
        want = p.degrees[i] - 1
        bad = [k for k in value if p.degrees[k] != want]
        report.record(
            not bad,
            "differential-degree",
            "d(%s)" % names[i],
            "terms of wrong degree: %s" % [names[k] for k in bad],
        )

    # graded antisymmetry on all basis pairs
    for i in range(n):
        for j in range(n):
            sign = -ONE if (p.degrees[i] * p.degrees[j]) % 2 == 0 else ONE
            lhs = p.bracket(elem(i), elem(j))
            rhs = p.bracket(elem(j), elem(i)).scale(sign)
            report.record(
                lhs == rhs,
                "antisymmetry",
                "(%s,%s)" % (names[i], names[j]),
                "[x,y] != -(-1)^{|x||y|}[y,x]",
            )

    # graded Jacobi on all basis triples
    for i in range(n):
        for j in range(n):
            sgn = -ONE if (p.degrees[i] * p.degrees[j]) % 2 else ONE
            for k in range(n):
                lhs = p.bracket(elem(i), p.bracket(elem(j), elem(k)))
                rhs = p.bracket(p.bracket(elem(i), elem(j)), elem(k)) + p.bracket(
                    elem(j), p.bracket(elem(i), elem(k))
                ).scale(sgn)
                report.record(
                    lhs == rhs,
                    "jacobi",
                    "(%s,%s,%s)" % (names[i], names[j], names[k]),
                )

    # graded Leibniz on all basis pairs
    for i in range(n):
        sgn = -ONE if p.degrees[i] % 2 else ONE
        for j in range(n):
            lhs = p.differential(p.bracket(elem(i), elem(j)))
            rhs = p.bracket(p.differential(elem(i)), elem(j)) + p.bracket(
                elem(i), p.differential(elem(j))
            ).scale(sgn)
            report.record(lhs == rhs, "leibniz", "(%s,%s)" % (names[i], names[j]))

    # d^2 = 0
    for i in range(n):
        report.record(
            p.differential(p.differential(elem(i))).is_zero,
            "d-squared",
            names[i],
        )

    # claimed nilpotency class
    if p.claimed_class is not None:
        series = p.lower_central_series()
        vanished = len(series) <= p.claimed_class
        report.record(
            vanished,
            "nilpotency-class",
            "claimed %d" % p.claimed_class,
            "lower central series still nonzero at stage %d" % (len(series),),
        )


def _validate_free(p: FreePresentation, report: SuiteReport) -> None:
    for g in p.generators:
        d = p.differential(p.gen(g.name))
        report.record(
            d.is_zero or d.degree == g.degree - 1,
            "differential-degree",
            "d(%s)" % g.name,
        )
        dd = p.differential(d)
        report.record(dd.is_zero, "d-squared", g.name, "d^2(%s) = %s" % (g.name, dd.format()))
