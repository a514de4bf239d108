"""Truncated graded tensor algebra over the rationals.

The free graded Lie algebra embeds in the tensor algebra on the same
generators via [x, y] = xy - (-1)^{|x||y|} yx.  Working with truncated
noncommutative polynomials (dict word -> Fraction, words longer than the
truncation dropped) gives a normal form that makes Koszul signs
mechanical; all Lyndon-basis rewriting is checked against, and
implemented through, this embedding.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .lyndon import LyndonBracket, Word

# A tensor polynomial: dict mapping words (tuples of generator indices)
# to nonzero Fractions.  The empty word is the unit and only appears in
# exp/log intermediates.
TensorPoly = dict[Word, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def t_zero() -> TensorPoly:
    return {}


def t_gen(g: int) -> TensorPoly:
    return {(g,): ONE}


def t_add_into(acc: TensorPoly, other: Mapping[Word, Fraction], scale: Fraction = ONE) -> None:
    if scale == 0:
        return
    for w, c in other.items():
        v = acc.get(w, ZERO) + scale * c
        if v:
            acc[w] = v
        else:
            acc.pop(w, None)


def t_add(a: Mapping[Word, Fraction], b: Mapping[Word, Fraction]) -> TensorPoly:
    out = dict(a)
    t_add_into(out, b)
    return out


def t_scale(a: Mapping[Word, Fraction], s: Fraction) -> TensorPoly:
    if s == 0:
        return {}
    return {w: s * c for w, c in a.items()}


def t_eq(a: Mapping[Word, Fraction], b: Mapping[Word, Fraction]) -> bool:
    return dict(a) == dict(b)


def word_degree(word: Word, degrees: Sequence[int]) -> int:
    return sum(degrees[g] for g in word)


def t_mul(a: Mapping[Word, Fraction], b: Mapping[Word, Fraction], max_len: int) -> TensorPoly:
    """Concatenation product, dropping words longer than max_len."""
    out: TensorPoly = {}
    for u, cu in a.items():
        room = max_len - len(u)
        for v, cv in b.items():
            if len(v) > room:
                continue
            w = u + v
            c = out.get(w, ZERO) + cu * cv
            if c:
                out[w] = c
            else:
                out.pop(w, None)
    return out


def t_commutator(
    a: Mapping[Word, Fraction],
    b: Mapping[Word, Fraction],
    degrees: Sequence[int],
    max_len: int,
) -> TensorPoly:
    """Graded commutator [a, b] = ab - (-1)^{|a||b|} ba at word level."""
    out: TensorPoly = {}
    for u, cu in a.items():
        du = word_degree(u, degrees)
        for v, cv in b.items():
            if len(u) + len(v) > max_len:
                continue
            dv = word_degree(v, degrees)
            sign = -ONE if (du * dv) % 2 else ONE
            c = cu * cv
            w1 = u + v
            x = out.get(w1, ZERO) + c
            if x:
                out[w1] = x
            else:
                out.pop(w1, None)
            w2 = v + u
            x = out.get(w2, ZERO) - sign * c
            if x:
                out[w2] = x
            else:
                out.pop(w2, None)
    return out


def t_derive(
    a: Mapping[Word, Fraction],
    gen_diffs: Sequence[Mapping[Word, Fraction]],
    degrees: Sequence[int],
    max_len: int,
) -> TensorPoly:
    """Extend the generator differentials as a graded derivation.

    d(x1...xm) = sum_i (-1)^{|x1|+...+|x_{i-1}|} x1...d(x_i)...xm.
    """
    # bucket differentials by term length so oversize substitutions skip fast
    out: TensorPoly = {}
    for w, c in a.items():
        room = max_len - len(w) + 1
        sign_exp = 0
        for i, g in enumerate(w):
            dg = gen_diffs[g]
            if dg:
                sgn = -ONE if sign_exp % 2 else ONE
                prefix, suffix = w[:i], w[i + 1 :]
                for t, ct in dg.items():
                    if len(t) > room:
                        continue
                    word = prefix + t + suffix
                    v = out.get(word, ZERO) + sgn * c * ct
                    if v:
                        out[word] = v
                    else:
                        out.pop(word, None)
            sign_exp += degrees[g]
    return out


def t_exp(a: Mapping[Word, Fraction], max_len: int) -> TensorPoly:
    """exp of a polynomial with no constant term (finite in the truncation)."""
    out: TensorPoly = {(): ONE}
    power: TensorPoly = {(): ONE}
    k = 0
    factorial = 1
    while True:
        k += 1
        factorial *= k
        power = t_mul(power, a, max_len)
        if not power:
            break
        t_add_into(out, power, Fraction(1, factorial))
        if k > max_len:
            break
    return out


def t_log(a: Mapping[Word, Fraction], max_len: int) -> TensorPoly:
    """log of 1 + nilpotent part; input must have constant term 1."""
    x = dict(a)
    unit = x.pop((), ZERO)
    if unit != 1:
        raise ValueError("t_log needs constant term 1")
    out: TensorPoly = {}
    power: TensorPoly = {(): ONE}
    k = 0
    while True:
        k += 1
        power = t_mul(power, x, max_len)
        if not power:
            break
        t_add_into(out, power, Fraction((-1) ** (k - 1), k))
        if k > max_len:
            break
    return out


def expand_bracket(
    b: LyndonBracket,
    degrees: Sequence[int],
    max_len: int,
    cache: dict[LyndonBracket, TensorPoly],
) -> TensorPoly:
    """Tensor expansion of a basis bracket, memoized in the given cache."""
    got = cache.get(b)
    if got is not None:
        return got
    if b.is_leaf:
        poly = t_gen(b.gen)
    else:
        poly = t_commutator(
            expand_bracket(b.left, degrees, max_len, cache),
            expand_bracket(b.right, degrees, max_len, cache),
            degrees,
            max_len,
        )
    cache[b] = poly
    return poly
