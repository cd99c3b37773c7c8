"""Truncated bivariate power series over exact polynomials in formal
zeta symbols, and the generating function for height-one values.

Symbols are encoded as small integers: ``GAMMA`` (= 1) stands for
Euler's constant and any integer s >= 2 stands for the zeta value at s.
A monomial is a sorted tuple of symbols, so the weight of a monomial is
simply its sum.  Gamma cancellation in the generating function is a
structural fact of the computed coefficients, not an assumption: gamma
is carried as an ordinary symbol and must vanish from the result.

The generating function identity used here is
``1 - G(-x) G(-y) / G(-x-y)`` where ``log G(1+t)`` has the exponent
series  -gamma*t + sum_{j>=2} (-1)^j zeta(j)/j t^j; the coefficient of
x^k y^n (k, n >= 1) is the height-one value with leading part k+1 and
n-1 trailing ones, expressed exactly in zeta symbols.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .numerics import ApproxValue, Precision, PrecisionError, as_precision, riemann_zeta, _U

__all__ = [
    "GAMMA",
    "zeta_symbol",
    "gamma_symbol",
    "ZetaPoly",
    "BivariateSeries",
    "series_mul",
    "series_exp",
    "log_gamma_series",
    "height_one_gf",
    "height_one_as_zeta_poly",
    "star_difference_certificate",
    "eval_zeta_poly",
]

GAMMA = 1

Scalar = Union[int, Fraction]


def gamma_symbol() -> int:
    """Symbol key for Euler's constant."""
    return GAMMA


def zeta_symbol(s: int) -> int:
    """Symbol key for the zeta value at integer s >= 2."""
    if not isinstance(s, int) or isinstance(s, bool) or s < 2:
        raise ValueError(f"zeta symbol needs an integer argument >= 2, got {s!r}")
    return s


def _check_monomial(mono) -> tuple:
    t = tuple(sorted(mono))
    for s in t:
        if not isinstance(s, int) or s < 1:
            raise ValueError(f"invalid symbol {s!r} in monomial")
    return t


class ZetaPoly:
    """Polynomial with exact rational coefficients in zeta symbols.

    Monomials are sorted tuples of symbol keys; the empty tuple is the
    constant monomial.  Zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        d: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mono, c in items:
                mono = _check_monomial(mono)
                c = Fraction(c)
                c0 = d.get(mono, 0) + c
                if c0:
                    d[mono] = c0
                elif mono in d:
                    del d[mono]
        self.terms = d

    @classmethod
    def zero(cls) -> "ZetaPoly":
        return cls()

    @classmethod
    def const(cls, c: Scalar) -> "ZetaPoly":
        return cls({(): Fraction(c)})

    @classmethod
    def zeta(cls, s: int, coeff: Scalar = 1) -> "ZetaPoly":
        return cls({(zeta_symbol(s),): Fraction(coeff)})

    @classmethod
    def gamma(cls, coeff: Scalar = 1) -> "ZetaPoly":
        return cls({(GAMMA,): Fraction(coeff)})

    def coeff(self, mono) -> Fraction:
        return self.terms.get(_check_monomial(mono), Fraction(0))

    def items(self):
        return self.terms.items()

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ZetaPoly) and self.terms == other.terms

    def __add__(self, other: "ZetaPoly") -> "ZetaPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            c0 = out.get(m, 0) + c
            if c0:
                out[m] = c0
            elif m in out:
                del out[m]
        p = ZetaPoly.__new__(ZetaPoly)
        p.terms = out
        return p

    def __sub__(self, other: "ZetaPoly") -> "ZetaPoly":
        return self + (-other)

    def __neg__(self) -> "ZetaPoly":
        p = ZetaPoly.__new__(ZetaPoly)
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def scale(self, c: Scalar) -> "ZetaPoly":
        c = Fraction(c)
        if not c:
            return ZetaPoly()
        p = ZetaPoly.__new__(ZetaPoly)
        p.terms = {m: cc * c for m, cc in self.terms.items()}
        return p

    def __mul__(self, other: "ZetaPoly") -> "ZetaPoly":
        if not isinstance(other, ZetaPoly):
            return NotImplemented
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                c0 = out.get(m, 0) + c1 * c2
                if c0:
                    out[m] = c0
                elif m in out:
                    del out[m]
        p = ZetaPoly.__new__(ZetaPoly)
        p.terms = out
        return p

    def is_gamma_free(self) -> bool:
        return all(GAMMA not in m for m in self.terms)

    def monomial_weights(self) -> set:
        """Weights (sum of symbol keys) of all monomials present."""
        return {sum(m) for m in self.terms}

    @staticmethod
    def _mono_text(mono: tuple) -> str:
        if not mono:
            return "1"
        pieces = []
        i = 0
        while i < len(mono):
            s = mono[i]
            p = 1
            while i + p < len(mono) and mono[i + p] == s:
                p += 1
            name = "g" if s == GAMMA else f"z{s}"
            pieces.append(name if p == 1 else f"{name}^{p}")
            i += p
        return "*".join(pieces)

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (sum(m), m)):
            c = self.terms[m]
            mag = -c if c < 0 else c
            body = self._mono_text(m)
            piece = str(mag) if body == "1" else f"{mag}*{body}"
            if not parts:
                parts.append(piece if c > 0 else f"-{piece}")
            else:
                parts.append(("+ " if c > 0 else "- ") + piece)
        return " ".join(parts)

    __str__ = text

    def __repr__(self) -> str:
        return f"<ZetaPoly {self.text()}>"

    def json_records(self) -> list:
        """List of {"monomial", "coeff"} records with exact coefficients."""
        return [
            {"monomial": self._mono_text(m), "coeff": str(self.terms[m])}
            for m in sorted(self.terms, key=lambda m: (sum(m), m))
        ]


class BivariateSeries:
    """Power series in x and y truncated by total degree, with ZetaPoly
    coefficients; absent coefficients are zero."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Union[Mapping, None] = None):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        d: dict = {}
        if coeffs:
            for (i, j), p in coeffs.items():
                if i < 0 or j < 0:
                    raise ValueError("exponents must be >= 0")
                if i + j > order:
                    continue
                if not isinstance(p, ZetaPoly):
                    p = ZetaPoly.const(p)
                if p:
                    d[(i, j)] = p
        self.coeffs = d

    @classmethod
    def zero(cls, order: int) -> "BivariateSeries":
        return cls(order)

    @classmethod
    def const(cls, order: int, c) -> "BivariateSeries":
        p = c if isinstance(c, ZetaPoly) else ZetaPoly.const(c)
        return cls(order, {(0, 0): p})

    def coefficient(self, i: int, j: int) -> ZetaPoly:
        return self.coeffs.get((i, j), ZetaPoly.zero())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BivariateSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        if self.order != other.order:
            raise ValueError("series order mismatch")
        out = dict(self.coeffs)
        for ij, p in other.coeffs.items():
            q = out.get(ij)
            r = p if q is None else q + p
            if r:
                out[ij] = r
            elif ij in out:
                del out[ij]
        s = BivariateSeries.__new__(BivariateSeries)
        s.order = self.order
        s.coeffs = out
        return s

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        return self + other.scale(Fraction(-1))

    def scale(self, c) -> "BivariateSeries":
        p = c if isinstance(c, ZetaPoly) else ZetaPoly.const(c)
        out = {}
        for ij, q in self.coeffs.items():
            r = q * p
            if r:
                out[ij] = r
        s = BivariateSeries.__new__(BivariateSeries)
        s.order = self.order
        s.coeffs = out
        return s


def series_mul(a: BivariateSeries, b: BivariateSeries) -> BivariateSeries:
    """Cauchy product truncated at the common order."""
    if a.order != b.order:
        raise ValueError("series order mismatch")
    out: dict = {}
    for (i1, j1), p in a.coeffs.items():
        for (i2, j2), q in b.coeffs.items():
            i, j = i1 + i2, j1 + j2
            if i + j > a.order:
                continue
            r = p * q
            prev = out.get((i, j))
            r = r if prev is None else prev + r
            if r:
                out[(i, j)] = r
            elif (i, j) in out:
                del out[(i, j)]
    s = BivariateSeries.__new__(BivariateSeries)
    s.order = a.order
    s.coeffs = out
    return s


def series_exp(a: BivariateSeries) -> BivariateSeries:
    """Exponential of a series with zero constant term: the partial sum
    of a^j / j! up to the order, which is exact under truncation."""
    if a.coefficient(0, 0):
        raise ValueError("series_exp needs a zero constant term")
    result = BivariateSeries.const(a.order, 1)
    power = BivariateSeries.const(a.order, 1)
    for j in range(1, a.order + 1):
        power = series_mul(power, a).scale(Fraction(1, j))
        result = result + power
    return result


def log_gamma_series(cx: Scalar, cy: Scalar, order: int) -> BivariateSeries:
    """Exponent series of the gamma factor at argument 1 + cx*x + cy*y:
    -gamma (cx x + cy y) + sum_{j=2..order} (-1)^j zeta(j)/j (cx x + cy y)^j.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    cx, cy = Fraction(cx), Fraction(cy)
    coeffs: dict = {}

    def bump(i, j, poly):
        prev = coeffs.get((i, j))
        r = poly if prev is None else prev + poly
        if r:
            coeffs[(i, j)] = r
        elif (i, j) in coeffs:
            del coeffs[(i, j)]

    if cx:
        bump(1, 0, ZetaPoly.gamma(-cx))
    if cy:
        bump(0, 1, ZetaPoly.gamma(-cy))
    for j in range(2, order + 1):
        c = Fraction((-1) ** j, j)
        for i in range(j + 1):
            coef = c * math.comb(j, i) * cx**i * cy ** (j - i)
            if coef:
                bump(i, j - i, ZetaPoly.zeta(j, coef))
    return BivariateSeries(order, coeffs)


@functools.lru_cache(maxsize=None)
def height_one_gf(order: int) -> BivariateSeries:
    """Generating function whose x^k y^n coefficient (k, n >= 1) is the
    height-one value with leading part k+1 and n-1 trailing ones.

    Computed as 1 - exp(E(-x) + E(-y) - E(-x-y)) with E the gamma
    exponent series; every gamma monomial must cancel identically.
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    exponent = (
        log_gamma_series(-1, 0, order)
        + log_gamma_series(0, -1, order)
        - log_gamma_series(-1, -1, order)
    )
    return BivariateSeries.const(order, 1) - series_exp(exponent)


def height_one_as_zeta_poly(k: int, n: int) -> ZetaPoly:
    """The height-one value zeta(k+1, 1^(n-1)) as an exact polynomial in
    zeta symbols (gamma-free)."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    return height_one_gf(k + n).coefficient(k, n)


def star_difference_certificate(k: int, n: int) -> ZetaPoly:
    """Exact zeta-symbol polynomial equal to the alternating star-value
    difference  (-1)^k zstar(k+1, 1^n) - (-1)^n zstar(n+1, 1^k).

    Builds the closed form: k*zeta(k+2, 1^(n-1)) - n*zeta(n+2, 1^(k-1))
    plus the two alternating products of a zeta value with a height-one
    value, every height-one value replaced by its zeta-symbol polynomial.
    The result witnesses that the difference lies in the ring generated
    by zeta values; it is antisymmetric under swapping k and n.
    """
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    total = height_one_as_zeta_poly(k + 1, n).scale(k)
    total = total - height_one_as_zeta_poly(n + 1, k).scale(n)
    sk = (-1) ** k
    for r in range(k - 1):
        total = total + (
            ZetaPoly.zeta(k - r, sk * (-1) ** r) * height_one_as_zeta_poly(n, r + 1)
        )
    sn = (-1) ** n
    for r in range(n - 1):
        total = total - (
            ZetaPoly.zeta(n - r, sn * (-1) ** r) * height_one_as_zeta_poly(k, r + 1)
        )
    return total


def eval_zeta_poly(
    p: ZetaPoly, prec: Union[Precision, float] = Precision()
) -> ApproxValue:
    """Evaluate a gamma-free zeta-symbol polynomial with rigorous error
    propagation (outward interval products per monomial)."""
    eps = as_precision(prec).target_eps
    if not p.is_gamma_free():
        raise ValueError("polynomial contains the gamma symbol; no numeric contract")
    if not p.terms:
        return ApproxValue(0.0, 0.0)
    eps_z = max(1e-12, eps * 1e-3)
    cache = {}
    for mono in p.terms:
        for s in mono:
            if s not in cache:
                cache[s] = riemann_zeta(s, eps_z)
    value = 0.0
    err = 0.0
    aval = 0.0
    for mono, coef in p.terms.items():
        v = 1.0
        hi = 1.0
        for s in mono:
            av = cache[s]
            v *= av.value
            hi *= abs(av.value) + av.err
        fc = float(coef)
        term_err = (hi - abs(v)) + (len(mono) + 2) * _U * hi
        value += fc * v
        aval += abs(fc * v)
        err += abs(fc) * term_err + 2 * _U * abs(fc) * (abs(v) + term_err)
    err += (len(p.terms) + 2) * _U * aval
    err *= 1.05
    if err > eps:
        raise PrecisionError(
            f"cannot certify zeta-polynomial value to {eps:g}; achievable bound is {err:.3g}"
        )
    return ApproxValue(value, err)
