"""Series engine: truncated bivariate series, the height-one generating
function, and the star-difference certificate."""

from fractions import Fraction

import pytest

from zetashuffle.numerics import PrecisionError, mzv, mzv_star, riemann_zeta
from zetashuffle.series import (
    GAMMA,
    BivariateSeries,
    ZetaPoly,
    eval_zeta_poly,
    gamma_symbol,
    height_one_as_zeta_poly,
    height_one_gf,
    log_gamma_series,
    series_exp,
    series_mul,
    star_difference_certificate,
    zeta_symbol,
)
from zetashuffle.words import Index


def test_symbols():
    assert gamma_symbol() == GAMMA
    assert zeta_symbol(2) == 2
    for bad in (1, 0, -2, 2.5):
        with pytest.raises(ValueError):
            zeta_symbol(bad)


def test_zeta_poly_basics():
    p = ZetaPoly.zeta(2) * ZetaPoly.zeta(3)
    assert p.coeff((2, 3)) == 1
    assert (p - p) == ZetaPoly.zero()
    sq = ZetaPoly.zeta(2) * ZetaPoly.zeta(2)
    assert sq.text() == "1*z2^2"
    assert ZetaPoly.gamma().text() == "1*g"
    assert ZetaPoly.const(Fraction(-3, 2)).text() == "-3/2"
    assert not ZetaPoly.gamma().is_gamma_free()
    assert sq.is_gamma_free()
    assert sq.monomial_weights() == {4}


def test_series_mul_examples():
    one_plus_x = BivariateSeries(2, {(0, 0): 1, (1, 0): 1})
    one_plus_y = BivariateSeries(2, {(0, 0): 1, (0, 1): 1})
    prod = series_mul(one_plus_x, one_plus_y)
    expected = BivariateSeries(2, {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1})
    assert prod == expected

    x = BivariateSeries(1, {(1, 0): 1})
    y = BivariateSeries(1, {(0, 1): 1})
    assert series_mul(x, y) == BivariateSeries.zero(1)  # degree-2 term truncated

    s = BivariateSeries(3, {(1, 0): ZetaPoly.zeta(2), (0, 2): 1})
    assert series_mul(s, BivariateSeries.const(3, 1)) == s


def test_series_mul_order_mismatch():
    with pytest.raises(ValueError):
        series_mul(BivariateSeries.zero(2), BivariateSeries.zero(3))


def test_series_exp_examples():
    assert series_exp(BivariateSeries.zero(4)) == BivariateSeries.const(4, 1)

    x = BivariateSeries(3, {(1, 0): 1})
    ex = series_exp(x)
    assert ex.coefficient(0, 0) == ZetaPoly.const(1)
    assert ex.coefficient(1, 0) == ZetaPoly.const(1)
    assert ex.coefficient(2, 0) == ZetaPoly.const(Fraction(1, 2))
    assert ex.coefficient(3, 0) == ZetaPoly.const(Fraction(1, 6))

    a = BivariateSeries(
        4, {(1, 0): ZetaPoly.gamma(-1), (2, 0): ZetaPoly.zeta(2, Fraction(1, 2))}
    )
    neg = a.scale(Fraction(-1))
    assert series_mul(series_exp(a), series_exp(neg)) == BivariateSeries.const(4, 1)


def test_series_exp_requires_zero_constant():
    with pytest.raises(ValueError):
        series_exp(BivariateSeries.const(3, 1))


def test_log_gamma_series_examples():
    s = log_gamma_series(-1, 0, 2)
    assert s.coefficient(1, 0) == ZetaPoly.gamma()
    assert s.coefficient(2, 0) == ZetaPoly.zeta(2, Fraction(1, 2))
    assert s.coefficient(0, 1) == ZetaPoly.zero()

    assert log_gamma_series(0, 0, 5) == BivariateSeries.zero(5)

    s = log_gamma_series(-1, -1, 2)
    assert s.coefficient(1, 0) == ZetaPoly.gamma()
    assert s.coefficient(0, 1) == ZetaPoly.gamma()
    assert s.coefficient(1, 1) == ZetaPoly.zeta(2)  # cross term of (x+y)^2 / 2
    assert s.coefficient(2, 0) == ZetaPoly.zeta(2, Fraction(1, 2))


def test_height_one_gf_low_coefficients_exact():
    gf = height_one_gf(4)
    assert gf.coefficient(1, 1) == ZetaPoly.zeta(2)
    assert gf.coefficient(2, 1) == ZetaPoly.zeta(3)
    assert gf.coefficient(1, 2) == ZetaPoly.zeta(3)
    assert gf.coefficient(0, 0) == ZetaPoly.zero()
    assert gf.coefficient(2, 0) == ZetaPoly.zero()  # pure powers vanish


def test_height_one_gf_gamma_free_and_weight_graded():
    # gamma must cancel structurally at every order up to 10
    for order in range(2, 11):
        gf = height_one_gf(order)
        for (i, j), coeff in gf.coeffs.items():
            assert coeff.is_gamma_free(), (order, i, j)
    gf = height_one_gf(8)
    for k in range(1, 8):
        for n in range(1, 9 - k):
            coeff = gf.coefficient(k, n)
            assert coeff.monomial_weights() <= {k + n}, (k, n)
            assert (k + n == 1) or coeff, (k, n)  # nonzero on the grid


def test_height_one_gf_requires_order_2():
    with pytest.raises(ValueError):
        height_one_gf(1)


def test_height_one_as_zeta_poly_matches_numerics():
    for k in range(1, 4):
        for n in range(1, 4):
            poly = height_one_as_zeta_poly(k, n)
            got = eval_zeta_poly(poly, 1e-8)
            want = mzv(Index((k + 1,) + (1,) * (n - 1)), 1e-8)
            assert abs(got.value - want.value) <= got.err + want.err + 1e-7


def test_height_one_symmetry_numeric():
    gf = height_one_gf(7)
    for k in range(1, 7):
        for n in range(1, 8 - k):
            a = eval_zeta_poly(gf.coefficient(k, n), 1e-8)
            b = eval_zeta_poly(gf.coefficient(n, k), 1e-8)
            assert abs(a.value - b.value) <= a.err + b.err + 1e-8


def test_certificate_zero_and_antisymmetry():
    assert star_difference_certificate(1, 1) == ZetaPoly.zero()
    for k in range(1, 4):
        for n in range(1, 4):
            left = star_difference_certificate(k, n)
            right = star_difference_certificate(n, k)
            assert (left + right) == ZetaPoly.zero()


def test_certificate_21_matches_star_difference():
    cert = eval_zeta_poly(star_difference_certificate(2, 1), 1e-8)
    lhs = mzv_star(Index((3, 1)), 1e-8).add(mzv_star(Index((2, 1, 1)), 1e-8))
    assert abs(cert.value - lhs.value) <= cert.err + lhs.err + 1e-6


def test_eval_zeta_poly_basics():
    z2 = eval_zeta_poly(ZetaPoly.zeta(2), 1e-9)
    want = riemann_zeta(2, 1e-10)
    assert abs(z2.value - want.value) <= z2.err + want.err
    zero = eval_zeta_poly(ZetaPoly.zero())
    assert zero.value == 0.0 and zero.err == 0.0
    # Euler: zeta(2)^2 = 5/2 zeta(4)
    combo = ZetaPoly({(2, 2): 1}) - ZetaPoly.zeta(4, Fraction(5, 2))
    av = eval_zeta_poly(combo, 1e-8)
    assert abs(av.value) <= av.err + 1e-10


def test_eval_zeta_poly_rejects_gamma():
    with pytest.raises(ValueError):
        eval_zeta_poly(ZetaPoly.gamma())


def test_eval_zeta_poly_precision_error():
    with pytest.raises(PrecisionError):
        eval_zeta_poly(ZetaPoly.zeta(2), 1e-17)
