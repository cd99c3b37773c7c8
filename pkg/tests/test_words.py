"""Word algebra: codecs, shuffle product, and its closed single-block form."""

import math
import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetashuffle.words import (
    Index,
    IndexSyntaxError,
    Letter,
    Poly,
    Word,
    admissible_indices,
    as_poly,
    compositions,
    index_from_word,
    index_stats,
    parse_index,
    parse_word,
    shuffle,
    shuffle_poly,
    shuffle_single_z,
    weak_compositions,
    word_from_index,
)


def w(s):
    return Word.from_string(s)


def brute_shuffle(u: Word, v: Word) -> Poly:
    """Independent oracle: enumerate all C(|u|+|v|, |u|) interleavings."""
    su, sv = str(u).replace("1", ""), str(v).replace("1", "")
    n = len(su) + len(sv)
    out = {}
    for pos in combinations(range(n), len(su)):
        slots = [None] * n
        it = iter(su)
        for p in pos:
            slots[p] = next(it)
        it = iter(sv)
        for i in range(n):
            if slots[i] is None:
                slots[i] = next(it)
        word = Word.from_string("".join(slots)) if n else Word()
        out[word] = out.get(word, 0) + 1
    return Poly(out)


def all_words(max_len):
    for n in range(max_len + 1):
        for bits in range(1 << n):
            yield Word(bits, n)


# ---------------------------------------------------------------------------
# words and codecs


def test_letter_has_two_inhabitants():
    assert set(Letter) == {Letter.X, Letter.Y}
    assert str(Letter.X) == "x" and str(Letter.Y) == "y"


def test_word_basics():
    assert len(w("1")) == 0
    assert str(w("xyy")) == "xyy"
    assert list(w("xy")) == [Letter.X, Letter.Y]
    assert w("xy").concat(w("y")) == w("xyy")
    assert w("xxy").mirror() == w("xyy")
    assert w("1").mirror() == w("1")
    assert w("xy").count_x() == 1 and w("xy").count_y() == 1


def test_membership_predicates():
    assert w("1").in_h1() and w("1").in_h0()
    assert w("xyy").in_h1() and w("xyy").in_h0()
    assert w("yxy").in_h1() and not w("yxy").in_h0()
    assert not w("xyx").in_h1() and not w("xyx").in_h0()


def test_word_from_index_examples():
    assert word_from_index(Index(())) == Word()
    assert word_from_index(Index((3, 1))) == w("xxyy")
    assert word_from_index(Index((2, 1, 1))) == w("xyyy")


def test_index_from_word_examples():
    assert index_from_word(w("xxyy")) == Index((3, 1))
    assert index_from_word(Word()) == Index(())
    assert index_from_word(w("xyxy")) == Index((2, 2))
    with pytest.raises(ValueError):
        index_from_word(w("yx"))


def test_index_stats_examples():
    assert index_stats(Index((3, 1))) == (4, 2, 1)
    assert index_stats(Index((2, 1, 1))) == (4, 3, 1)
    assert index_stats(Index(())) == (0, 0, 0)


def test_index_validation():
    with pytest.raises(ValueError):
        Index((0, 1))
    with pytest.raises(ValueError):
        Index((2, -1))
    assert Index((2, 1)).admissible
    assert not Index((1, 2)).admissible
    assert not Index(()).admissible


def test_codec_round_trip_weight_up_to_12():
    for weight in range(13):
        for depth in range(0, weight + 1):
            if depth == 0 and weight > 0:
                continue
            for comp in compositions(weight, depth) if depth else [()]:
                k = Index(comp)
                assert index_from_word(word_from_index(k)) == k


# ---------------------------------------------------------------------------
# shuffle product


def test_shuffle_unit_axiom():
    assert shuffle(Word(), w("xy")) == Poly.of_word(w("xy"))
    assert shuffle(w("xy"), Word()) == Poly.of_word(w("xy"))
    assert shuffle(Word(), Word()) == Poly.unit()


def test_shuffle_frozen_examples():
    # both expected values computed with the interleaving oracle
    assert shuffle(w("xy"), w("xy")) == Poly({w("xyxy"): 2, w("xxyy"): 4})
    assert shuffle(w("y"), w("xy")) == Poly({w("yxy"): 1, w("xyy"): 2})


def test_shuffle_matches_bruteforce_exhaustively():
    for total in range(7):
        for la in range(total + 1):
            lb = total - la
            for ba in range(1 << la):
                for bb in range(1 << lb):
                    u, v = Word(ba, la), Word(bb, lb)
                    assert shuffle(u, v) == brute_shuffle(u, v)
                    assert shuffle(v, u) == brute_shuffle(u, v)


def test_shuffle_laws_exhaustive_small():
    words = list(all_words(3))
    for u in words:
        for v in words:
            assert shuffle(u, v) == shuffle(v, u)
    for u in words:
        for v in words:
            for t in words:
                if len(u) + len(v) + len(t) > 5:
                    continue
                left = shuffle_poly(shuffle(u, v), as_poly(t))
                right = shuffle_poly(as_poly(u), shuffle(v, t))
                assert left == right


def test_shuffle_mass_and_letter_conservation():
    rng = random.Random(7)
    for _ in range(200):
        total = rng.randint(0, 8)
        la = rng.randint(0, total)
        u = Word(rng.getrandbits(la) if la else 0, la)
        v = Word(rng.getrandbits(total - la) if total - la else 0, total - la)
        p = shuffle(u, v)
        assert p.mass() == math.comb(total, la)
        for term, _ in p.items():
            assert term.count_x() == u.count_x() + v.count_x()
            assert term.count_y() == u.count_y() + v.count_y()


def test_shuffle_h0_closure():
    h0_words = [t for t in all_words(5) if t.in_h0()]
    for u in h0_words:
        for v in h0_words:
            for term, _ in shuffle(u, v).items():
                assert term.in_h0()


@st.composite
def words(draw, max_len=8):
    n = draw(st.integers(min_value=0, max_value=max_len))
    bits = draw(st.integers(min_value=0, max_value=(1 << n) - 1)) if n else 0
    return Word(bits, n)


@settings(max_examples=150, deadline=None)
@given(words(max_len=4), words(max_len=4))
def test_shuffle_commutes_and_matches_oracle(u, v):
    p = shuffle(u, v)
    assert p == shuffle(v, u)
    assert p == brute_shuffle(u, v)
    assert p.mass() == math.comb(len(u) + len(v), len(u))


# ---------------------------------------------------------------------------
# closed single-block expansion


def test_shuffle_single_z_frozen_examples():
    assert shuffle_single_z(2, Index((2,))) == shuffle(w("xy"), w("xy"))
    assert shuffle_single_z(1, Index((2,))) == shuffle(w("y"), w("xy"))
    assert shuffle_single_z(3, Index((2, 1))) == shuffle(w("xxy"), w("xyy"))


def test_shuffle_single_z_matches_recursive_shuffle():
    for l in range(1, 6):
        for weight in range(1, 8):
            for depth in range(1, weight + 1):
                for comp in compositions(weight, depth):
                    k = Index(comp)
                    expected = shuffle(word_from_index(Index((l,))), word_from_index(k))
                    assert shuffle_single_z(l, k) == expected, (l, k)


def test_shuffle_single_z_validation():
    with pytest.raises(ValueError):
        shuffle_single_z(0, Index((2,)))
    with pytest.raises(ValueError):
        shuffle_single_z(2, Index(()))


# ---------------------------------------------------------------------------
# polynomials


def test_poly_canonical_zero_removal():
    p = Poly({w("xy"): Fraction(1, 2)}) + Poly({w("xy"): Fraction(-1, 2)})
    assert not p
    assert p == Poly.zero()
    assert len(p) == 0


def test_poly_scalar_bilinearity():
    p = Fraction(1, 2) * Poly.of_word(w("xy"))
    q = 2 * Poly.of_word(w("y"))
    assert shuffle_poly(p, q) == shuffle(w("xy"), w("y"))
    assert shuffle_poly(Poly.zero(), q) == Poly.zero()
    z2, z3 = word_from_index(Index((2,))), word_from_index(Index((3,)))
    z1 = word_from_index(Index((1,)))
    lhs = shuffle_poly(Poly.of_word(z2) + Poly.of_word(z3), as_poly(z1))
    assert lhs == shuffle(z2, z1) + shuffle(z3, z1)


def test_poly_concat():
    p = Poly({w("x"): 1, w("y"): 1})
    assert p.concat(p) == Poly({w("xx"): 1, w("xy"): 1, w("yx"): 1, w("yy"): 1})
    assert Poly.unit().concat(p) == p


def test_poly_text_ordering():
    p = Poly({w("xyxy"): 2, w("xxyy"): 4})
    assert p.text() == "4*xxyy + 2*xyxy"
    assert Poly.zero().text() == "0"
    q = Poly({w("xy"): -1, w("y"): 3})
    assert q.text() == "3*y - 1*xy"


# ---------------------------------------------------------------------------
# parsing


def test_parse_index_examples():
    assert parse_index("(3,1)") == Index((3, 1))
    assert parse_index("( 2 , 1 , 1 )") == Index((2, 1, 1))
    assert parse_index("()") == Index(())
    with pytest.raises(ValueError, match="index parts must be ≥ 1"):
        parse_index("(0,1)")


def test_parse_index_syntax_errors_carry_columns():
    with pytest.raises(IndexSyntaxError) as info:
        parse_index("3,1)")
    assert info.value.column == 1
    with pytest.raises(IndexSyntaxError) as info:
        parse_index("(3,")
    assert info.value.column == 4
    with pytest.raises(IndexSyntaxError):
        parse_index("(3,1) junk")


def test_parse_index_render_round_trip():
    for weight in range(13):
        for depth in range(1, weight + 1):
            for comp in compositions(weight, depth):
                k = Index(comp)
                assert parse_index(str(k)) == k
    assert parse_index(str(Index(()))) == Index(())


def test_parse_word():
    assert parse_word("xxy") == w("xxy")
    assert parse_word("1") == Word()
    with pytest.raises(ValueError):
        parse_word("xz")


# ---------------------------------------------------------------------------
# combinatorial helpers


def test_weak_compositions_colex_order():
    assert list(weak_compositions(1, 2)) == [(1, 0), (0, 1)]
    assert list(weak_compositions(0, 0)) == [()]
    assert list(weak_compositions(2, 0)) == []
    assert len(list(weak_compositions(4, 3))) == math.comb(6, 2)


def test_admissible_indices_counts():
    # 2^(w-2) admissible indices of weight w
    for weight in range(2, 10):
        assert len(list(admissible_indices(weight))) == 2 ** (weight - 2)
    assert list(admissible_indices(1)) == []
