"""Lyndon words and Lyndon brackets.

Basis bookkeeping for free (complete, length-truncated) graded Lie
algebras.  Generators are referred to by their index in the declaration
order; a word is a tuple of generator indices.  The basis of the free
Lie algebra on even generators is the set of Lyndon brackets (standard
factorization).  When odd-degree generators are present the basis also
contains the squares [b_v, b_v] for each Lyndon word v of odd total
degree; those keys carry the non-Lyndon word v+v.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

Word = tuple[int, ...]


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int


@dataclass(frozen=True)
class LyndonBracket:
    """A basis bracket: either a generator leaf or an ordered pair."""

    word: Word
    degree: int
    gen: Optional[int] = None
    left: Optional["LyndonBracket"] = None
    right: Optional["LyndonBracket"] = None

    @property
    def is_leaf(self) -> bool:
        return self.gen is not None

    @property
    def length(self) -> int:
        return len(self.word)

    def sort_key(self) -> tuple:
        return (len(self.word), self.word)

    def format(self, names: Sequence[str]) -> str:
        if self.is_leaf:
            return names[self.gen]
        return "[%s,%s]" % (self.left.format(names), self.right.format(names))


def leaf(gen: int, degree: int) -> LyndonBracket:
    return LyndonBracket(word=(gen,), degree=degree, gen=gen)


def pair(left: LyndonBracket, right: LyndonBracket) -> LyndonBracket:
    return LyndonBracket(
        word=left.word + right.word,
        degree=left.degree + right.degree,
        left=left,
        right=right,
    )


def is_lyndon(word: Word) -> bool:
    """A word is Lyndon iff it is strictly smaller than all its proper suffixes."""
    if not word:
        return False
    return all(word < word[i:] for i in range(1, len(word)))


def lyndon_words(n_letters: int, max_len: int) -> list[Word]:
    """All Lyndon words of length <= max_len, by Duval's algorithm.

    Returned sorted by (length, lexicographic).
    """
    if n_letters < 1 or max_len < 1:
        return []
    out: list[Word] = []
    w = [0]
    while w:
        if len(w) <= max_len:
            out.append(tuple(w))
        # extend periodically to max_len, then increment
        x = w * (max_len // len(w)) + w[: max_len % len(w)]
        while x and x[-1] == n_letters - 1:
            x.pop()
        if x:
            x[-1] += 1
        w = x
    out.sort(key=lambda u: (len(u), u))
    return out


def standard_factorization(word: Word) -> tuple[Word, Word]:
    """Split a Lyndon word of length >= 2 as uv with v the longest proper
    Lyndon suffix."""
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise ValueError("not a Lyndon word: %r" % (word,))


class BracketFactory:
    """Canonical bracketing of Lyndon words for a fixed list of generator
    degrees, with memoization."""

    def __init__(self, degrees: Sequence[int]):
        self.degrees = tuple(degrees)
        self._cache: dict[Word, LyndonBracket] = {}

    def word_degree(self, word: Word) -> int:
        return sum(self.degrees[g] for g in word)

    def bracketing(self, word: Word) -> LyndonBracket:
        b = self._cache.get(word)
        if b is not None:
            return b
        if len(word) == 1:
            b = leaf(word[0], self.degrees[word[0]])
        else:
            u, v = standard_factorization(word)
            b = pair(self.bracketing(u), self.bracketing(v))
        self._cache[word] = b
        return b

    def square(self, word: Word) -> LyndonBracket:
        """The key [b_w, b_w] for an odd-degree Lyndon word w."""
        b = self.bracketing(word)
        return pair(b, b)


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    if n == 1:
        return 1
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def witt_number(n_letters: int, length: int) -> int:
    """Number of Lyndon words of the given length over n_letters letters."""
    total = 0
    for d in range(1, length + 1):
        if length % d == 0:
            total += _mobius(d) * n_letters ** (length // d)
    return total // length


def lyndon_basis_words(n_letters: int, max_len: int) -> list[Word]:
    return lyndon_words(n_letters, max_len)
