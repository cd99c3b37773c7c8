"""Algebra maps on words: letter substitutions, the mirror involution,
index duality, weight-raising operators, and star expansion.

``sigma`` is the concatenation automorphism fixing x and sending
y -> x + y; ``smap`` applies sigma to every letter except the last.
``tau`` mirrors a word while exchanging x and y; on admissible indices
it realizes duality.  ``sigma_m`` distributes extra weight m over the
parts of an index, and ``star_expand`` rewrites a star value as the sum
of strict values obtained by gluing adjacent parts (the image of the
index word under ``smap``).
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .words import (
    Index,
    Poly,
    Word,
    as_poly,
    index_from_word,
    weak_compositions,
    word_from_index,
)

__all__ = [
    "IndexCombination",
    "sigma",
    "sigma_inv",
    "smap",
    "smap_inv",
    "tau",
    "dual_index",
    "dual_index_blocks",
    "sigma_m",
    "star_expand",
]

Scalar = Union[int, Fraction]


class IndexCombination:
    """Finite Q-linear combination of indices, in canonical form.

    The isomorphic image of a polynomial supported on words ending in y;
    zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        d: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                k = Index(k)
                c0 = d.get(k, 0) + c
                if c0:
                    d[k] = c0
                elif k in d:
                    del d[k]
        self.terms = d

    @classmethod
    def of_index(cls, k: Index, coeff: Scalar = 1) -> "IndexCombination":
        return cls({Index(k): coeff})

    @classmethod
    def from_poly(cls, p: Poly) -> "IndexCombination":
        return cls((index_from_word(w), c) for w, c in p.items())

    def to_poly(self) -> Poly:
        return Poly((word_from_index(k), c) for k, c in self.terms.items())

    def coeff(self, k: Index) -> Scalar:
        return self.terms.get(Index(k), 0)

    def items(self):
        return self.terms.items()

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IndexCombination) and self.terms == other.terms

    def __add__(self, other: "IndexCombination") -> "IndexCombination":
        out = dict(self.terms)
        for k, c in other.terms.items():
            c0 = out.get(k, 0) + c
            if c0:
                out[k] = c0
            elif k in out:
                del out[k]
        r = IndexCombination.__new__(IndexCombination)
        r.terms = out
        return r

    def __sub__(self, other: "IndexCombination") -> "IndexCombination":
        return self + (-other)

    def __neg__(self) -> "IndexCombination":
        r = IndexCombination.__new__(IndexCombination)
        r.terms = {k: -c for k, c in self.terms.items()}
        return r

    def __mul__(self, scalar: Scalar) -> "IndexCombination":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if not scalar:
            return IndexCombination()
        r = IndexCombination.__new__(IndexCombination)
        r.terms = {k: c * scalar for k, c in self.terms.items()}
        return r

    __rmul__ = __mul__

    def text(self) -> str:
        """Render as ``c1*(...) + c2*(...)`` ordered by weight then parts."""
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda k: (k.weight, tuple(k))):
            c = self.terms[k]
            mag = -c if c < 0 else c
            piece = f"{mag}*{k}"
            if not parts:
                parts.append(piece if c > 0 else f"-{piece}")
            else:
                parts.append(("+ " if c > 0 else "- ") + piece)
        return " ".join(parts)

    __str__ = text

    def __repr__(self) -> str:
        return f"<IndexCombination {self.text()}>"


def _append(w: Word, bit: int) -> Word:
    return Word(w.bits | (bit << w.length), w.length + 1)


@functools.lru_cache(maxsize=65536)
def _substitute_word(w: Word, minus: bool) -> Poly:
    # Expand the letterwise substitution x -> x, y -> (+-x) + y.
    # Each expansion step maps distinct words to distinct words, so no
    # coefficient collisions occur.
    xsign = -1 if minus else 1
    terms = {Word(): 1}
    for i in range(w.length):
        if not (w.bits >> i) & 1:
            terms = {_append(u, 0): c for u, c in terms.items()}
        else:
            out = {}
            for u, c in terms.items():
                out[_append(u, 0)] = xsign * c
                out[_append(u, 1)] = c
            terms = out
    p = Poly.__new__(Poly)
    p.terms = terms
    return p


def sigma(p: Union[Word, Poly]) -> Poly:
    """The automorphism fixing x and sending y to x + y."""
    out = Poly()
    for w, c in as_poly(p).items():
        out = out + c * _substitute_word(w, False)
    return out


def sigma_inv(p: Union[Word, Poly]) -> Poly:
    """Inverse of ``sigma``: fixes x, sends y to -x + y."""
    out = Poly()
    for w, c in as_poly(p).items():
        out = out + c * _substitute_word(w, True)
    return out


def _last_letter_fixing(p: Union[Word, Poly], minus: bool) -> Poly:
    out = Poly()
    for w, c in as_poly(p).items():
        if w.length == 0:
            out = out + Poly({w: c})
            continue
        last = (w.bits >> (w.length - 1)) & 1
        prefix = Word(w.bits & ((1 << (w.length - 1)) - 1), w.length - 1)
        expanded = _substitute_word(prefix, minus)
        out = out + Poly({_append(u, last): c * cu for u, cu in expanded.items()})
    return out


def smap(p: Union[Word, Poly]) -> Poly:
    """Apply ``sigma`` to every letter except the last, which is kept."""
    return _last_letter_fixing(p, False)


def smap_inv(p: Union[Word, Poly]) -> Poly:
    """Two-sided inverse of ``smap``."""
    return _last_letter_fixing(p, True)


def tau(p: Union[Word, Poly]) -> Poly:
    """Mirror antiautomorphism: reverse each word and swap x with y."""
    return Poly((w.mirror(), c) for w, c in as_poly(p).items())


def dual_index(k: Index) -> Index:
    """The dual of an admissible index, via the mirror involution."""
    k = Index(k)
    if not k.admissible:
        raise ValueError(f"index {k} is not admissible; duality is undefined")
    return index_from_word(word_from_index(k).mirror())


def dual_index_blocks(k: Index) -> Index:
    """The dual index by the block rewrite.

    Writing k = (a_1+1, 1^(b_1-1), ..., a_u+1, 1^(b_u-1)) with all
    a_i, b_i >= 1, the dual is (b_u+1, 1^(a_u-1), ..., b_1+1, 1^(a_1-1)).
    Kept alongside the mirror route as a cross-check; the two must agree.
    """
    k = Index(k)
    if not k.admissible:
        raise ValueError(f"index {k} is not admissible; duality is undefined")
    blocks = []
    i = 0
    while i < len(k):
        a = k[i] - 1
        j = i + 1
        ones = 0
        while j < len(k) and k[j] == 1:
            ones += 1
            j += 1
        blocks.append((a, ones + 1))
        i = j
    parts = []
    for a, b in reversed(blocks):
        parts.append(b + 1)
        parts.extend([1] * (a - 1))
    return Index(parts)


def sigma_m(m: int, k: Index) -> IndexCombination:
    """Distribute extra weight m over the parts of k in all ways.

    Sums the C(m+n-1, n-1) indices (k_1+a_1, ..., k_n+a_n) over weak
    compositions a of m, enumerated in colexicographic order; m = 0 is
    the identity.
    """
    if m < 0:
        raise ValueError("weight shift m must be >= 0")
    k = Index(k)
    if not k:
        return IndexCombination({Index(): 1}) if m == 0 else IndexCombination()
    out: dict = {}
    for comp in weak_compositions(m, len(k)):
        idx = Index(p + a for p, a in zip(k, comp))
        out[idx] = out.get(idx, 0) + 1
    return IndexCombination(out)


def star_expand(k: Index) -> IndexCombination:
    """Rewrite a star value as a sum of 2^(depth-1) strict values.

    Image of the index word under ``smap``, read back as indices; every
    resulting index is admissible and each coefficient is 1.
    """
    k = Index(k)
    if not k:
        return IndexCombination({Index(): 1})
    if not k.admissible:
        raise ValueError(f"index {k} is not admissible; star expansion is undefined")
    return IndexCombination.from_poly(smap(word_from_index(k)))
