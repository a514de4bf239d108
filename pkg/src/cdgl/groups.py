"""Group structures carried by a degree-{0,1} cdgl.

The degree-0 part is a group under the Baker-Campbell-Hausdorff product,
the degree-1 part under the product characterized by
d(e1 # e2) = d(e1) * d(e2), and exp(ad) gives the action tying them
together.  Both products are evaluated from universal tables: nested
bracket expressions with exact rational coefficients, computed once per
truncation order in a free presentation and then substituted into any
target presentation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping, Optional, Sequence

from . import linalg, tensor
from .algebra import (
    FreePresentation,
    GradedLieElement,
    Presentation,
    StructureConstantsPresentation,
    _require_homogeneous,
)
from .errors import ConstructionError, DomainError, PrecisionError
from .lyndon import Generator, LyndonBracket, leaf, pair

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


# -- universal BCH table -------------------------------------------------


def _segmentation_weights(word: tuple[int, ...]) -> dict[int, Fraction]:
    """For a word over {0, 1}: map block-count n to the sum over all
    segmentations into n consecutive blocks of shape 0^p 1^q (p+q >= 1)
    of prod_i 1/(p_i! q_i!)."""
    memo: dict[tuple[int, ...], dict[int, Fraction]] = {(): {0: ONE}}

    def block_weight(seg: tuple[int, ...]) -> Optional[Fraction]:
        # weight of a single block, or None if not of shape 0^p 1^q
        p = 0
        while p < len(seg) and seg[p] == 0:
            p += 1
        if any(c != 1 for c in seg[p:]):
            return None
        q = len(seg) - p
        return Fraction(1, factorial(p) * factorial(q))

    def rec(suffix: tuple[int, ...]) -> dict[int, Fraction]:
        got = memo.get(suffix)
        if got is not None:
            return got
        out: dict[int, Fraction] = {}
        for i in range(1, len(suffix) + 1):
            w = block_weight(suffix[:i])
            if w is None:
                continue
            for n, c in rec(suffix[i:]).items():
                out[n + 1] = out.get(n + 1, ZERO) + w * c
        memo[suffix] = out
        return out

    return rec(word)


def _dynkin_word_coefficient(word: tuple[int, ...]) -> Fraction:
    """Coefficient of the word in log(e^x e^y), by Dynkin's expansion of
    the logarithm over blocks x^p y^q."""
    total = ZERO
    for n, weight in _segmentation_weights(word).items():
        if n >= 1:
            total += Fraction((-1) ** (n - 1), n) * weight
    return total


def _left_normed_expansion(word: tuple[int, ...], max_len: int) -> tensor.TensorPoly:
    """Tensor expansion of the left-normed bracketing [[..[w1,w2],w3]..,wm]."""
    degrees = (0, 0)
    out = tensor.t_gen(word[0])
    for g in word[1:]:
        out = tensor.t_commutator(out, tensor.t_gen(g), degrees, max_len)
    return out


@lru_cache(maxsize=None)
def _bch_presentation(order: int) -> FreePresentation:
    return FreePresentation([Generator("X", 0), Generator("Y", 0)], truncation=order)


@lru_cache(maxsize=None)
def bch_table(order: int) -> tuple[tuple[Fraction, LyndonBracket], ...]:
    """The BCH series x*y through bracket length `order`, as Lyndon-basis
    brackets over the two letters 0 (x) and 1 (y), by Dynkin's formula
    with the Dynkin-Specht-Wever projection."""
    if order < 1:
        raise DomainError("order must be >= 1")
    poly: tensor.TensorPoly = {}
    words: list[tuple[int, ...]] = [()]
    for _ in range(order):
        words = [w + (g,) for w in words for g in (0, 1)]
        for w in words:
            c = _dynkin_word_coefficient(w)
            if c:
                tensor.t_add_into(poly, _left_normed_expansion(w, order), c / len(w))
    p = _bch_presentation(order)
    element = p.from_tensor(poly)
    items = sorted(element.terms.items(), key=lambda kv: kv[0].sort_key())
    return tuple((c, k) for k, c in items)


def bch_tensor(order: int) -> tensor.TensorPoly:
    """Independent route: log(exp x exp y) in the truncated tensor algebra."""
    ex = tensor.t_exp(tensor.t_gen(0), order)
    ey = tensor.t_exp(tensor.t_gen(1), order)
    return tensor.t_log(tensor.t_mul(ex, ey, order), order)


def evaluate_bracket_tree(
    tree: LyndonBracket,
    substitution: Mapping[int, GradedLieElement],
    presentation: Presentation,
    _memo: Optional[dict] = None,
) -> GradedLieElement:
    """Evaluate a nested bracket expression with leaves replaced by the
    given elements."""
    if _memo is None:
        _memo = {}
    got = _memo.get(id(tree))
    if got is not None:
        return got
    if tree.is_leaf:
        value = substitution[tree.gen]
    else:
        value = presentation.bracket(
            evaluate_bracket_tree(tree.left, substitution, presentation, _memo),
            evaluate_bracket_tree(tree.right, substitution, presentation, _memo),
        )
    _memo[id(tree)] = value
    return value


def bch(x: GradedLieElement, y: GradedLieElement, presentation: Presentation) -> GradedLieElement:
    """Baker-Campbell-Hausdorff product x * y, exact for nilpotent
    presentations of class <= the presentation's bracket bound."""
    _require_homogeneous(x, 0, "bch argument")
    _require_homogeneous(y, 0, "bch argument")
    order = presentation.bracket_bound()
    subst = {0: x, 1: y}
    memo: dict = {}
    out = presentation.zero()
    for c, tree in bch_table(order):
        out = out + evaluate_bracket_tree(tree, subst, presentation, memo).scale(c)
    return out


def bch_inverse(x: GradedLieElement) -> GradedLieElement:
    return -x


def bch_word(presentation: Presentation, elements: Sequence[GradedLieElement]) -> GradedLieElement:
    """Left-to-right BCH product of a list of degree-0 elements."""
    out = presentation.zero()
    for e in elements:
        out = bch(out, e, presentation)
    return out


# -- exponential adjoint action -----------------------------------------


def exp_ad(x: GradedLieElement, z: GradedLieElement, presentation: Presentation) -> GradedLieElement:
    """e^{ad_x}(z) = sum_k ad_x^k(z) / k!."""
    _require_homogeneous(x, 0, "exp_ad actor")
    bound = presentation.bracket_bound()
    out = z
    cur = z
    for k in range(1, bound + 1):
        cur = presentation.bracket(x, cur)
        if cur.is_zero:
            return out
        out = out + cur.scale(Fraction(1, factorial(k)))
    cur = presentation.bracket(x, cur)
    if not cur.is_zero:
        raise PrecisionError("ad_x did not vanish within the bracket bound")
    return out


def is_maurer_cartan(a: GradedLieElement, presentation: Presentation) -> bool:
    """True iff da + 1/2 [a, a] = 0 (degree -1 elements of scratch algebras)."""
    _require_homogeneous(a, -1, "Maurer-Cartan candidate")
    residue = presentation.differential(a) + presentation.bracket(a, a).scale(HALF)
    return residue.is_zero


# -- the degree-1 product ------------------------------------------------

# leaf labels of perp-table trees
U1, U2, DU1, DU2 = 0, 1, 2, 3
_PERP_LEAF_DEGREES = {U1: 1, U2: 1, DU1: 0, DU2: 0}


@dataclass(frozen=True)
class UniversalPerpTable:
    """The element w of the scratch algebra on (u1, u2, du1, du2) with
    dw = du1 * du2, as nested brackets ready for substitution."""

    order: int
    rule: str
    terms: tuple[tuple[Fraction, LyndonBracket], ...]


def _relabel_tree(tree: LyndonBracket, mapping: Mapping[int, int]) -> LyndonBracket:
    if tree.is_leaf:
        g = mapping[tree.gen]
        return leaf(g, _PERP_LEAF_DEGREES[g])
    return pair(_relabel_tree(tree.left, mapping), _relabel_tree(tree.right, mapping))


def _replace_extreme_leaf(tree: LyndonBracket, leftmost: bool) -> LyndonBracket:
    """Replace the leftmost (or rightmost) leaf du_i by u_i."""
    if tree.is_leaf:
        g = {DU1: U1, DU2: U2}[tree.gen]
        return leaf(g, _PERP_LEAF_DEGREES[g])
    if leftmost:
        return pair(_replace_extreme_leaf(tree.left, leftmost), tree.right)
    return pair(tree.left, _replace_extreme_leaf(tree.right, leftmost))


@lru_cache(maxsize=None)
def build_perp_table(order: int, rule: str = "leftmost") -> UniversalPerpTable:
    """Build and verify the universal table for the degree-1 product.

    Start from the BCH series du1 * du2 in the Lyndon basis and replace,
    in each basis bracket monomial, one extreme letter du_i by u_i.  With
    either rule the letters passed over by d have degree 0, so d restores
    each monomial with sign +1 and dw = du1 * du2 holds term by term;
    this is re-verified exactly before the table is returned.
    """
    if rule not in ("leftmost", "rightmost"):
        raise DomainError("unknown replacement rule %r" % rule)
    terms = []
    for c, tree in bch_table(order):
        relabeled = _relabel_tree(tree, {0: DU1, 1: DU2})
        terms.append((c, _replace_extreme_leaf(relabeled, rule == "leftmost")))
    table = UniversalPerpTable(order=order, rule=rule, terms=tuple(terms))

    scratch = FreePresentation(
        [Generator("u1", 1), Generator("u2", 1), Generator("du1", 0), Generator("du2", 0)],
        truncation=order,
    )
    scratch.set_differential(
        {"u1": scratch.gen("du1"), "u2": scratch.gen("du2"), "du1": scratch.zero(), "du2": scratch.zero()}
    )
    subst = {
        U1: scratch.gen("u1"),
        U2: scratch.gen("u2"),
        DU1: scratch.gen("du1"),
        DU2: scratch.gen("du2"),
    }
    memo: dict = {}
    omega = scratch.zero()
    for c, tree in table.terms:
        omega = omega + evaluate_bracket_tree(tree, subst, scratch, memo).scale(c)
    lhs = scratch.differential(omega)
    rhs = bch(scratch.gen("du1"), scratch.gen("du2"), scratch)
    if lhs != rhs:
        raise ConstructionError(
            "d(omega) != du1 * du2 at order %d; bracket rewriting is inconsistent" % order
        )
    return table


def _check_perp_domain(presentation: Presentation, table: UniversalPerpTable) -> None:
    degs = presentation.degrees_present()
    if not degs <= {0, 1}:
        raise DomainError("the degree-1 product needs a presentation concentrated in degrees {0,1}")
    if table.order < presentation.bracket_bound():
        raise PrecisionError(
            "perp table order %d < required bound %d" % (table.order, presentation.bracket_bound())
        )


def perp(
    e1: GradedLieElement,
    e2: GradedLieElement,
    presentation: Presentation,
    table: UniversalPerpTable,
) -> GradedLieElement:
    """The group product on the degree-1 part; satisfies
    d(e1 # e2) = d(e1) * d(e2)."""
    _require_homogeneous(e1, 1, "perp argument")
    _require_homogeneous(e2, 1, "perp argument")
    _check_perp_domain(presentation, table)
    subst = {
        U1: e1,
        U2: e2,
        DU1: presentation.differential(e1),
        DU2: presentation.differential(e2),
    }
    memo: dict = {}
    out = presentation.zero()
    for c, tree in table.terms:
        out = out + evaluate_bracket_tree(tree, subst, presentation, memo).scale(c)
    return out


def perp_inverse(
    e: GradedLieElement,
    presentation: Presentation,
    table: UniversalPerpTable,
) -> GradedLieElement:
    """Inverse for the degree-1 product, by fixed-point iteration
    z <- z - (e # z); terminates within the nilpotency bound."""
    _require_homogeneous(e, 1, "perp_inverse argument")
    z = -e
    for _ in range(presentation.bracket_bound() + 1):
        correction = perp(e, z, presentation, table)
        if correction.is_zero:
            break
        z = z - correction
    if not perp(e, z, presentation, table).is_zero or not perp(z, e, presentation, table).is_zero:
        raise PrecisionError("perp inverse iteration did not terminate within the class bound")
    return z


# -- 2-type reduction ----------------------------------------------------


@dataclass
class QuotientMap:
    """The projection of a cdgl onto its degree-{0,1} quotient."""

    source: StructureConstantsPresentation
    target: StructureConstantsPresentation
    # rows indexed by source basis, giving target coordinates
    matrix: list[list[Fraction]]

    def __call__(self, a: GradedLieElement) -> GradedLieElement:
        if a.presentation is not self.source:
            raise DomainError("element of a different presentation")
        out: dict[int, Fraction] = {}
        for i, c in a.terms.items():
            for j, m in enumerate(self.matrix[i]):
                if m:
                    v = out.get(j, ZERO) + c * m
                    if v:
                        out[j] = v
                    else:
                        out.pop(j, None)
        return GradedLieElement(self.target, out)


def two_type_reduce(
    presentation: StructureConstantsPresentation,
) -> tuple[StructureConstantsPresentation, QuotientMap]:
    """Quotient by the acyclic ideal spanned by everything of degree >= 2
    together with the boundaries of degree 2; valid (a quasi-isomorphism)
    when the homology vanishes in degrees >= 2, which is checked first.
    """
    p = presentation
    if min(p.degrees, default=0) < 0:
        raise DomainError("2-type reduction needs a presentation in degrees >= 0")
    n = len(p.generators)

    def diff_rows(degree: int) -> list[list[Fraction]]:
        rows = []
        for i in p.basis_keys(degree):
            rows.append(p.coords(p.differential(p.gen(p.generators[i].name))))
        return rows

    max_deg = max(p.degrees, default=0)
    if max_deg <= 1:
        identity = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        return p, QuotientMap(p, p, identity)

    # H_{>=2} = 0: in each degree k >= 2, ker(d_k) must equal im(d_{k+1})
    for k in range(2, max_deg + 1):
        dk = diff_rows(k)
        cycles = len(p.basis_keys(k)) - linalg.rank(dk)
        boundaries = linalg.rank(diff_rows(k + 1)) if k < max_deg else 0
        if cycles != boundaries:
            raise DomainError(
                "H_%d is nonzero (dim ker d = %d, dim im d = %d); quotient would not be a quasi-isomorphism"
                % (k, cycles, boundaries)
            )

    deg1 = p.basis_keys(1)
    deg1_pos = {idx: pos for pos, idx in enumerate(deg1)}
    boundary_rows = []
    for i in p.basis_keys(2):
        full = p.coords(p.differential(p.gen(p.generators[i].name)))
        boundary_rows.append([full[j] for j in deg1])
    boundary_basis = linalg.row_space_basis(boundary_rows)
    kept_positions = linalg.complement_indices(boundary_basis, len(deg1))
    kept = [deg1[pos] for pos in kept_positions]

    new_basis_src = p.basis_keys(0) + kept
    new_names = [p.generators[i].name for i in new_basis_src]
    new_gens = [Generator(nm, p.degrees[i]) for nm, i in zip(new_names, new_basis_src)]
    new_index = {i: j for j, i in enumerate(new_basis_src)}

    # projection matrix: source basis -> target coordinates
    span_rows = boundary_basis + [
        [ONE if q == pos else ZERO for q in range(len(deg1))] for pos in kept_positions
    ]
    matrix: list[list[Fraction]] = []
    for i in range(n):
        row = [ZERO] * len(new_basis_src)
        deg = p.degrees[i]
        if deg == 0:
            row[new_index[i]] = ONE
        elif deg == 1:
            target_vec = [ONE if deg1_pos[i] == q else ZERO for q in range(len(deg1))]
            coeffs = linalg.solve_in_span(span_rows, target_vec)
            if coeffs is None:
                raise ConstructionError("degree-1 basis vector not in boundary + complement span")
            for j, pos in enumerate(kept_positions):
                row[new_index[deg1[pos]]] = coeffs[len(boundary_basis) + j]
        matrix.append(row)

    def project_terms(a: GradedLieElement) -> dict[str, Fraction]:
        out: dict[str, Fraction] = {}
        for i, c in a.terms.items():
            for j, m in enumerate(matrix[i]):
                if m:
                    nm = new_names[j]
                    v = out.get(nm, ZERO) + c * m
                    if v:
                        out[nm] = v
                    else:
                        out.pop(nm, None)
        return out

    new_brackets: dict[tuple[str, str], dict[str, Fraction]] = {}
    for i in new_basis_src:
        for j in new_basis_src:
            value = p.bracket(p.gen(p.generators[i].name), p.gen(p.generators[j].name))
            projected = project_terms(value)
            if projected:
                new_brackets[(p.generators[i].name, p.generators[j].name)] = projected
    new_diff: dict[str, dict[str, Fraction]] = {}
    for i in kept:
        value = p.differential(p.gen(p.generators[i].name))
        projected = project_terms(value)
        if projected:
            new_diff[p.generators[i].name] = projected

    reduced = StructureConstantsPresentation(
        new_gens, new_brackets, new_diff, name=(p.name + "-reduced") if p.name else "reduced"
    )
    qmap = QuotientMap(p, reduced, matrix)

    # the projection must be a cdgl morphism on the whole basis
    for i in range(n):
        ei = p.gen(p.generators[i].name)
        if qmap(p.differential(ei)) != reduced.differential(qmap(ei)):
            raise ConstructionError("quotient map does not commute with d on %s" % p.generators[i].name)
        for j in range(n):
            ej = p.gen(p.generators[j].name)
            if qmap(p.bracket(ei, ej)) != reduced.bracket(qmap(ei), qmap(ej)):
                raise ConstructionError(
                    "quotient map does not commute with the bracket on (%s, %s)"
                    % (p.generators[i].name, p.generators[j].name)
                )
    return reduced, qmap


# -- degree 0/1 homology -------------------------------------------------


def homology01(
    presentation: StructureConstantsPresentation,
) -> tuple[list[GradedLieElement], list[GradedLieElement]]:
    """(H0 representative basis, H1 basis) for a degree-{0,1} presentation.

    H1 = ker(d: L1 -> L0); H0 = a complement of im d in L0 (as vector
    spaces; the group structure on H0 is BCH on representatives).
    """
    p = presentation
    if not p.degrees_present() <= {0, 1}:
        raise DomainError("homology01 needs a degree-{0,1} presentation")
    deg0 = p.basis_keys(0)
    deg1 = p.basis_keys(1)
    deg0_pos = {idx: pos for pos, idx in enumerate(deg0)}

    d_rows = []
    for i in deg1:
        full = p.coords(p.differential(p.gen(p.generators[i].name)))
        d_rows.append([full[j] for j in deg0])

    if not deg1:
        h1: list[GradedLieElement] = []
    elif not deg0:
        h1 = [p.gen(p.generators[i].name) for i in deg1]
    else:
        transpose = [list(col) for col in zip(*d_rows)]
        h1 = [
            GradedLieElement(p, {deg1[q]: c for q, c in enumerate(v) if c})
            for v in linalg.nullspace_basis(transpose)
        ]

    image_basis = linalg.row_space_basis(d_rows)
    coker_positions = linalg.complement_indices(image_basis, len(deg0))
    h0 = [p.gen(p.generators[deg0[pos]].name) for pos in coker_positions]
    return h0, h1
