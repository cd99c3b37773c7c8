"""Words over the two-letter alphabet {x, y} and exact sparse polynomials.

A word is a packed bit sequence (bit i = letter at position i, 0 = x,
1 = y) with an explicit length, so equality, hashing, prefix/suffix
surgery and the mirror involution are all cheap integer operations.
Polynomials are sparse maps word -> exact rational with zero
coefficients eagerly removed, so structural equality of the term maps
is semantic equality.  All values here are immutable by convention:
functions never mutate their inputs and callers must not mutate the
``terms`` dict of a returned ``Poly``.

An index (k_1, ..., k_n) of positive integers corresponds to the word
z_{k_1}...z_{k_n} with z_k = x^(k-1) y; the codecs between the two live
here together with the shuffle product and its closed single-block
expansion.
"""

from __future__ import annotations

import functools
import math
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "Letter",
    "Word",
    "Index",
    "Poly",
    "IndexSyntaxError",
    "as_poly",
    "word_from_index",
    "index_from_word",
    "index_stats",
    "shuffle",
    "shuffle_poly",
    "shuffle_single_z",
    "parse_index",
    "parse_word",
    "weak_compositions",
    "compositions",
    "admissible_indices",
    "binom",
]

Scalar = Union[int, Fraction]


class Letter(IntEnum):
    """The two letters of the alphabet."""

    X = 0
    Y = 1

    def __str__(self) -> str:
        return "x" if self is Letter.X else "y"


class Word:
    """Immutable word over {x, y}; the empty word is the algebra unit.

    ``bits`` holds one bit per letter (bit i = letter i from the left,
    0 = x, 1 = y), ``length`` the number of letters.
    """

    __slots__ = ("bits", "length", "_hash")

    def __init__(self, bits: int = 0, length: int = 0):
        if length < 0 or bits < 0 or bits >> length:
            raise ValueError("word bits do not fit the stated length")
        self.bits = bits
        self.length = length
        self._hash = hash((bits, length))

    @classmethod
    def from_string(cls, s: str) -> "Word":
        """Parse a word from text: a string over 'x'/'y', or '1' for the unit."""
        s = s.strip()
        if s in ("", "1"):
            return cls()
        bits = 0
        for i, ch in enumerate(s):
            if ch == "y":
                bits |= 1 << i
            elif ch != "x":
                raise ValueError(
                    f"column {i + 1}: invalid word character {ch!r} (expected 'x' or 'y')"
                )
        return cls(bits, len(s))

    @classmethod
    def from_letters(cls, letters: Iterable[Letter]) -> "Word":
        bits = 0
        n = 0
        for let in letters:
            b = int(let)
            if b not in (0, 1):
                raise ValueError(f"not a letter: {let!r}")
            bits |= b << n
            n += 1
        return cls(bits, n)

    def __len__(self) -> int:
        return self.length

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Word)
            and self.bits == other.bits
            and self.length == other.length
        )

    def __hash__(self) -> int:
        return self._hash

    def __iter__(self) -> Iterator[Letter]:
        for i in range(self.length):
            yield Letter((self.bits >> i) & 1)

    def __str__(self) -> str:
        if not self.length:
            return "1"
        return "".join("y" if (self.bits >> i) & 1 else "x" for i in range(self.length))

    def __repr__(self) -> str:
        return f"Word.from_string({str(self)!r})"

    def letter(self, i: int) -> Letter:
        if not 0 <= i < self.length:
            raise IndexError("letter position out of range")
        return Letter((self.bits >> i) & 1)

    @property
    def letters(self) -> tuple:
        return tuple(self)

    def count_y(self) -> int:
        return bin(self.bits).count("1")

    def count_x(self) -> int:
        return self.length - self.count_y()

    def in_h1(self) -> bool:
        """Empty, or ends in y."""
        return self.length == 0 or bool((self.bits >> (self.length - 1)) & 1)

    def in_h0(self) -> bool:
        """Empty, or starts with x and ends in y (an admissible word)."""
        return self.length == 0 or ((self.bits & 1) == 0 and self.in_h1())

    def concat(self, other: "Word") -> "Word":
        return Word(self.bits | (other.bits << self.length), self.length + other.length)

    def mirror(self) -> "Word":
        """Reverse the word and exchange x with y (an involution)."""
        bits = 0
        for i in range(self.length):
            if not (self.bits >> i) & 1:
                bits |= 1 << (self.length - 1 - i)
        return Word(bits, self.length)

    def sort_key(self) -> tuple:
        """Length-then-lexicographic ordering key (x < y)."""
        return (self.length, tuple((self.bits >> i) & 1 for i in range(self.length)))


_EMPTY_WORD = Word()


class Index(tuple):
    """A composition of positive integers; ``Index()`` is the empty index."""

    def __new__(cls, parts: Iterable[int] = ()) -> "Index":
        vals = tuple(parts)
        for p in vals:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError("index parts must be ≥ 1")
        return super().__new__(cls, vals)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def depth(self) -> int:
        return len(self)

    @property
    def height(self) -> int:
        return sum(1 for p in self if p >= 2)

    @property
    def admissible(self) -> bool:
        """Nonempty with first part >= 2 (the nested series converges)."""
        return len(self) > 0 and self[0] >= 2

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self) + ")"

    def __repr__(self) -> str:
        return f"Index({tuple(self)})"


class Poly:
    """Finite Q-linear combination of words in canonical form.

    Coefficients are ints or Fractions; zero coefficients are never
    stored, so ``==`` on term maps is exact algebraic equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        d: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for w, c in items:
                if not isinstance(w, Word):
                    raise TypeError(f"Poly keys must be Word, got {type(w).__name__}")
                c0 = d.get(w, 0) + c
                if c0:
                    d[w] = c0
                elif w in d:
                    del d[w]
        self.terms = d

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def unit(cls) -> "Poly":
        return cls({_EMPTY_WORD: 1})

    @classmethod
    def of_word(cls, w: Word, coeff: Scalar = 1) -> "Poly":
        return cls({w: coeff} if coeff else None)

    def coeff(self, w: Word) -> Scalar:
        return self.terms.get(w, 0)

    def items(self):
        return self.terms.items()

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            c0 = out.get(w, 0) + c
            if c0:
                out[w] = c0
            elif w in out:
                del out[w]
        p = Poly.__new__(Poly)
        p.terms = out
        return p

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        p = Poly.__new__(Poly)
        p.terms = {w: -c for w, c in self.terms.items()}
        return p

    def __mul__(self, scalar: Scalar) -> "Poly":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if not scalar:
            return Poly()
        p = Poly.__new__(Poly)
        p.terms = {w: c * scalar for w, c in self.terms.items()}
        return p

    __rmul__ = __mul__

    def concat(self, other: "Poly") -> "Poly":
        """Noncommutative concatenation product, extended bilinearly."""
        out: dict = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = u.concat(v)
                c0 = out.get(w, 0) + cu * cv
                if c0:
                    out[w] = c0
                elif w in out:
                    del out[w]
        p = Poly.__new__(Poly)
        p.terms = out
        return p

    def mass(self) -> Scalar:
        """Sum of all coefficients."""
        return sum(self.terms.values())

    def text(self) -> str:
        """Render as ``c1*w1 + c2*w2 + ...`` in length-then-lex term order."""
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=Word.sort_key):
            c = self.terms[w]
            mag = -c if c < 0 else c
            piece = f"{mag}*{w}"
            if not parts:
                parts.append(piece if c > 0 else f"-{piece}")
            else:
                parts.append(("+ " if c > 0 else "- ") + piece)
        return " ".join(parts)

    __str__ = text

    def __repr__(self) -> str:
        return f"<Poly {self.text()}>"


def as_poly(obj: Union[Word, Poly]) -> Poly:
    """Coerce a single word to the corresponding one-term polynomial."""
    if isinstance(obj, Poly):
        return obj
    if isinstance(obj, Word):
        return Poly.of_word(obj)
    raise TypeError(f"expected Word or Poly, got {type(obj).__name__}")


def word_from_index(k: Index) -> Word:
    """The word z_{k_1}...z_{k_n}; the empty index maps to the unit word."""
    bits = 0
    n = 0
    for part in Index(k):
        n += part
        bits |= 1 << (n - 1)
    return Word(bits, n)


def index_from_word(w: Word) -> Index:
    """Inverse codec; rejects words that do not end in y."""
    if w.length and not w.in_h1():
        raise ValueError(f"word {w} does not end in y and has no index form")
    parts = []
    prev = -1
    for i in range(w.length):
        if (w.bits >> i) & 1:
            parts.append(i - prev)
            prev = i
    return Index(parts)


def index_stats(k: Index) -> tuple:
    """(weight, depth, height) of an index."""
    k = Index(k)
    return (k.weight, k.depth, k.height)


@functools.lru_cache(maxsize=8192)
def _shuffle_words(u: Word, v: Word) -> Poly:
    # Dynamic programming over suffix pairs: row[j] = shuffle(u[i:], v[j:]).
    lu, lv = u.length, v.length
    prev: list = []
    for i in range(lu, -1, -1):
        row: list = [None] * (lv + 1)
        for j in range(lv, -1, -1):
            if i == lu:
                row[j] = {Word(v.bits >> j, lv - j): 1}
            elif j == lv:
                row[j] = {Word(u.bits >> i, lu - i): 1}
            else:
                a = (u.bits >> i) & 1
                b = (v.bits >> j) & 1
                out: dict = {}
                for w, c in prev[j].items():
                    key = Word((w.bits << 1) | a, w.length + 1)
                    out[key] = out.get(key, 0) + c
                for w, c in row[j + 1].items():
                    key = Word((w.bits << 1) | b, w.length + 1)
                    out[key] = out.get(key, 0) + c
                row[j] = out
        prev = row
    p = Poly.__new__(Poly)
    p.terms = prev[0]
    return p


def shuffle(u: Word, v: Word) -> Poly:
    """Shuffle product of two words.

    The result is memoized on the commutatively ordered pair; absence of
    a cache entry never changes the result, so concurrent use is safe.
    """
    if (v.length, v.bits) < (u.length, u.bits):
        u, v = v, u
    return _shuffle_words(u, v)


def shuffle_poly(p: Union[Word, Poly], q: Union[Word, Poly]) -> Poly:
    """Bilinear extension of the shuffle product to polynomials."""
    p, q = as_poly(p), as_poly(q)
    out: dict = {}
    for u, cu in p.terms.items():
        for v, cv in q.terms.items():
            c = cu * cv
            for w, cw in shuffle(u, v).terms.items():
                c0 = out.get(w, 0) + c * cw
                if c0:
                    out[w] = c0
                elif w in out:
                    del out[w]
    r = Poly.__new__(Poly)
    r.terms = out
    return r


def binom(a: int, b: int) -> int:
    """Binomial coefficient with the zero-outside-range convention."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def weak_compositions(total: int, parts: int) -> Iterator[tuple]:
    """All tuples of ``parts`` ints >= 0 summing to ``total``, in
    colexicographic order (last coordinate varies slowest)."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for last in range(total + 1):
        for front in weak_compositions(total - last, parts - 1):
            yield front + (last,)


def compositions(total: int, parts: int) -> Iterator[tuple]:
    """All tuples of ``parts`` ints >= 1 summing to ``total``."""
    for comp in weak_compositions(total - parts, parts):
        yield tuple(c + 1 for c in comp)


def admissible_indices(weight: int) -> Iterator[Index]:
    """All admissible indices of the given weight (first part >= 2)."""
    if weight < 2:
        return
    for depth in range(1, weight):
        for comp in compositions(weight, depth):
            if comp[0] >= 2:
                yield Index(comp)


def shuffle_single_z(l: int, k: Index) -> Poly:
    """Closed-form expansion of z_l shuffled with z_{k_1}...z_{k_d}.

    Binomial-weighted sum over compositions; must agree with the
    recursive shuffle product, which is the trusted definition.
    """
    if l < 1:
        raise ValueError("block size l must be >= 1")
    k = Index(k)
    if not k:
        raise ValueError("index must be nonempty")
    d = len(k)
    out: dict = {}

    def add(idx_parts, coeff):
        if coeff:
            w = word_from_index(Index(idx_parts))
            c0 = out.get(w, 0) + coeff
            if c0:
                out[w] = c0
            elif w in out:
                del out[w]

    for i in range(1, d + 1):
        total = l + sum(k[:i])
        tail = k[i:]
        for alpha in compositions(total, i + 1):
            coeff = 1
            for j in range(i - 1):
                coeff *= binom(alpha[j] - 1, k[j] - 1)
                if not coeff:
                    break
            if coeff:
                coeff *= binom(alpha[i - 1] - 1, k[i - 1] - alpha[i])
            add(alpha + tail, coeff)
    total = l + sum(k)
    for alpha in compositions(total, d + 1):
        coeff = 1
        for j in range(d):
            coeff *= binom(alpha[j] - 1, k[j] - 1)
            if not coeff:
                break
        add(alpha, coeff)
    return Poly(out)


class IndexSyntaxError(ValueError):
    """Index text that does not match ``'(' [int (',' int)*] ')'``."""

    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


def parse_index(s: str) -> Index:
    """Parse ``(k1,k2,...,kn)`` with optional whitespace; ``()`` is empty.

    Raises IndexSyntaxError with a 1-based column on malformed text and
    ValueError on parts < 1.
    """
    i, n = 0, len(s)

    def skip_ws(i):
        while i < n and s[i].isspace():
            i += 1
        return i

    i = skip_ws(i)
    if i >= n or s[i] != "(":
        raise IndexSyntaxError("expected '('", i + 1)
    i = skip_ws(i + 1)
    parts = []
    if i < n and s[i] == ")":
        i += 1
    else:
        while True:
            start = i
            while i < n and s[i].isdigit():
                i += 1
            if i == start:
                raise IndexSyntaxError("expected an integer", i + 1)
            value = int(s[start:i])
            if value < 1:
                raise ValueError("index parts must be ≥ 1")
            parts.append(value)
            i = skip_ws(i)
            if i < n and s[i] == ",":
                i = skip_ws(i + 1)
            elif i < n and s[i] == ")":
                i += 1
                break
            else:
                raise IndexSyntaxError("expected ',' or ')'", i + 1)
    i = skip_ws(i)
    if i != n:
        raise IndexSyntaxError("unexpected trailing text", i + 1)
    return Index(parts)


def parse_word(s: str) -> Word:
    """Parse word text: a nonempty string over 'x'/'y', or '1'."""
    return Word.from_string(s)
