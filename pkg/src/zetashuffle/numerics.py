"""Rigorous floating evaluation of zeta values, nested zeta sums, and
their star variants.

Every evaluator returns an ApproxValue: a float paired with an absolute
error bound that covers both series truncation and floating-point
rounding.  Truncation is handled exactly rather than merely bounded:
splitting each summation variable at a cutoff M factors the nested sum
into partial sums with every variable <= M (computed by dynamic
programming) times tail sums with every variable > M.  The tails are
iterated Hurwitz-type sums; because the leading exponent is >= 2 they
admit expansions in pure inverse powers of the cutoff, which we build
with exact rational coefficients by Euler-Maclaurin summation and close
with explicit remainder bounds.  Rounding is covered by conservative
forward-error estimates on the positive-term sums.

The crude logarithmic tail bound for the plain truncated sum is also
exposed (``mzv_tail_bound``) together with the plain partial sums, so
the bracketing property  partial(M) <= full <= partial(M) + bound(M)
can be checked directly.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .morphisms import IndexCombination, star_expand
from .words import Index

__all__ = [
    "Precision",
    "ApproxValue",
    "PrecisionError",
    "as_precision",
    "riemann_zeta",
    "mzv",
    "mzv_star",
    "eval_combination",
    "mzv_partial_sum",
    "mzv_star_partial_sum",
    "mzv_tail_bound",
]

# Unit roundoff headroom for binary64 (2^-52, twice the rounding unit).
_U = 2.0 ** -52

_EM_TERMS = 10  # Euler-Maclaurin correction depth
_EXP_CAP = 48  # largest inverse power kept in a tail expansion
_CUTOFF = 128  # summation cutoff; rounding grows with it, tails shrink


class PrecisionError(ArithmeticError):
    """The requested error bound cannot be certified by this evaluator."""


@dataclass(frozen=True)
class Precision:
    """A target absolute error bound for a numeric evaluation."""

    target_eps: float = 1e-6

    def __post_init__(self):
        if not (self.target_eps > 0.0):
            raise ValueError("target_eps must be > 0")


def as_precision(prec: Union[Precision, float, int]) -> Precision:
    if isinstance(prec, Precision):
        return prec
    return Precision(float(prec))


@dataclass(frozen=True)
class ApproxValue:
    """A real value with a rigorous absolute error bound.

    The true quantity lies in [value - err, value + err].
    """

    value: float
    err: float

    def __post_init__(self):
        if not (self.err >= 0.0 and math.isfinite(self.err) and math.isfinite(self.value)):
            raise ValueError("ApproxValue needs a finite value and err >= 0")

    def add(self, other: "ApproxValue") -> "ApproxValue":
        v = self.value + other.value
        return ApproxValue(v, self.err + other.err + 2 * _U * abs(v))

    def sub(self, other: "ApproxValue") -> "ApproxValue":
        v = self.value - other.value
        return ApproxValue(v, self.err + other.err + 2 * _U * abs(v))

    def scale(self, c: float) -> "ApproxValue":
        c = float(c)
        v = c * self.value
        return ApproxValue(v, abs(c) * self.err + 2 * _U * abs(v))

    def mul(self, other: "ApproxValue") -> "ApproxValue":
        v = self.value * other.value
        err = (
            abs(self.value) * other.err
            + abs(other.value) * self.err
            + self.err * other.err
            + 2 * _U * abs(v)
        )
        return ApproxValue(v, err)

    def neg(self) -> "ApproxValue":
        return ApproxValue(-self.value, self.err)

    def json(self) -> str:
        return f'{{"value": {self.value:.16e}, "err": {self.err:.16e}}}'

    def __str__(self) -> str:
        return f"{self.value:.17g} ± {self.err:.3g}"


@functools.lru_cache(maxsize=None)
def _bernoulli(m: int) -> Fraction:
    if m == 0:
        return Fraction(1)
    return -Fraction(1, m + 1) * sum(
        Fraction(math.comb(m + 1, j)) * _bernoulli(j) for j in range(m)
    )


def _rising(s: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= s + i
    return out


class _PowerTail:
    """A function of v of the form  sum_t c_t v^-t + eps(v)  with exact
    rational c_t and |eps(v)| <= rem * v^-rem_exp for all v >= the cutoff
    it was built for."""

    __slots__ = ("coeffs", "rem", "rem_exp")

    def __init__(self, coeffs: dict, rem: float, rem_exp: int):
        self.coeffs = coeffs
        self.rem = rem
        self.rem_exp = rem_exp


@functools.lru_cache(maxsize=None)
def _hurwitz_tail(s: int) -> _PowerTail:
    """Expansion of sum_{m>v} m^-s for integer s >= 2, valid for v >= 1.

    Euler-Maclaurin applied to t^-s; the remainder after the B_{2q} term
    is bounded via the periodized Bernoulli kernel by
    4 (2*pi)^-(2q+1) * s(s+1)...(s+2q-1) * v^-(s+2q).
    """
    q = _EM_TERMS
    coeffs = {s - 1: Fraction(1, s - 1), s: Fraction(-1, 2)}
    for j in range(1, q + 1):
        coeffs[s + 2 * j - 1] = (
            _bernoulli(2 * j) * _rising(s, 2 * j - 1) / Fraction(math.factorial(2 * j))
        )
    rem = 4.0 * float(_rising(s, 2 * q)) / (2.0 * math.pi) ** (2 * q + 1)
    return _PowerTail(coeffs, rem * 1.000001, s + 2 * q)


def _fold_remainders(parts, M: int):
    # Convert bounds rem_i * v^-e_i to the smallest exponent using v >= M.
    e = min(ei for _, ei in parts)
    total = 0.0
    for ri, ei in parts:
        total += ri * float(M) ** (e - ei)
    return total * 1.000001, e


def _weighted_tail(s: int, pt: _PowerTail, M: int) -> _PowerTail:
    """Expansion of sum_{v>u} v^-s * pt(v), valid for u >= M."""
    coeffs: dict = {}
    rems = []
    for t, c in pt.coeffs.items():
        ht = _hurwitz_tail(s + t)
        for tt, cc in ht.coeffs.items():
            c0 = coeffs.get(tt, 0) + c * cc
            if c0:
                coeffs[tt] = c0
            elif tt in coeffs:
                del coeffs[tt]
        rems.append((abs(float(c)) * ht.rem, ht.rem_exp))
    # sum_{v>u} v^-s * rem v^-rem_exp <= rem * u^(1-s-rem_exp) / (s+rem_exp-1)
    rems.append((pt.rem / (s + pt.rem_exp - 1), s + pt.rem_exp - 1))
    for t in [t for t in coeffs if t > _EXP_CAP]:
        c = coeffs.pop(t)
        rems.append((abs(float(c)) * float(M) ** (_EXP_CAP + 1 - t), _EXP_CAP + 1))
    rem, rem_exp = _fold_remainders(rems, M)
    return _PowerTail(coeffs, rem, rem_exp)


@functools.lru_cache(maxsize=16384)
def _tail_expansion(prefix: tuple, M: int) -> _PowerTail:
    """Expansion of the strict chain sum with all variables > u, for the
    exponents ``prefix`` (outermost first); valid for u >= M."""
    if len(prefix) == 1:
        return _hurwitz_tail(prefix[0])
    return _weighted_tail(prefix[-1], _tail_expansion(prefix[:-1], M), M)


def _eval_tail(pt: _PowerTail, M: int):
    val = 0.0
    aval = 0.0
    for t in sorted(pt.coeffs, reverse=True):
        term = float(pt.coeffs[t]) / M**t
        val += term
        aval += abs(term)
    # rem * M^-rem_exp, guarded against float underflow of the power
    if pt.rem > 0.0:
        lr = math.log(pt.rem) - pt.rem_exp * math.log(M)
        erem = 1e-250 if lr < -590.0 else math.exp(lr) * 1.001
    else:
        erem = 0.0
    return val, erem + (len(pt.coeffs) + 4) * _U * aval


def _nested_partial_sums(k: tuple, M: int):
    """F_j(M) for j = 1..n: nested strict partial sums with all variables
    <= M, plus per-level relative rounding bounds."""
    n = len(k)
    prev = [1.0] * (M + 1)
    values = [0.0] * (n + 2)
    rels = [0.0] * (n + 2)
    values[n + 1] = 1.0
    for j in range(n, 0, -1):
        s = k[j - 1]
        cur = [0.0] * (M + 1)
        acc = 0.0
        for v in range(1, M + 1):
            acc += prev[v - 1] / v**s
            cur[v] = acc
        values[j] = acc
        # positive-term summation: relative error <= (terms + slack) * u
        rels[j] = rels[j + 1] + (M + 6) * _U
        prev = cur
    return values, rels


@functools.lru_cache(maxsize=None)
def _mzv_enclosure(k: tuple, M: int):
    values, rels = _nested_partial_sums(k, M)
    n = len(k)
    total = values[1]
    err = rels[1] * values[1]
    for j in range(1, n + 1):
        kv, ke = _eval_tail(_tail_expansion(k[:j], M), M)
        fv = values[j + 1]
        fe = rels[j + 1] * fv
        total += fv * kv
        err += fv * ke + abs(kv) * fe + fe * ke + 2 * _U * abs(fv * kv)
    err += (n + 3) * _U * abs(total)
    return total, err * 1.05


def mzv(k: Index, prec: Union[Precision, float] = Precision()) -> ApproxValue:
    """The nested strict zeta sum at an admissible index.

    The empty index evaluates to exactly 1; non-admissible nonempty
    indices are rejected (the series diverges).
    """
    k = Index(k)
    if not k:
        return ApproxValue(1.0, 0.0)
    if not k.admissible:
        raise ValueError(f"index {k} is not admissible (first part must be >= 2)")
    eps = as_precision(prec).target_eps
    value, err = _mzv_enclosure(tuple(k), _CUTOFF)
    if err <= eps:
        return ApproxValue(value, err)
    raise PrecisionError(
        f"cannot certify zeta{k} to {eps:g}; achievable bound is {err:.3g}"
    )


@functools.lru_cache(maxsize=None)
def _zeta_cached(s: int, eps: float) -> ApproxValue:
    M = 64
    direct = 0.0
    for m in range(1, M + 1):
        direct += 1.0 / m**s
    round_err = (M + 6) * _U * direct
    tval, terr = _eval_tail(_hurwitz_tail(s), M)
    value = direct + tval
    err = (round_err + terr + 2 * _U * abs(value)) * 1.05
    if err <= eps:
        return ApproxValue(value, err)
    raise PrecisionError(
        f"cannot certify zeta({s}) to {eps:g}; achievable bound is {err:.3g}"
    )


def riemann_zeta(s: int, prec: Union[Precision, float] = Precision()) -> ApproxValue:
    """Riemann zeta at an integer s >= 2: direct summation to a cutoff
    plus an Euler-Maclaurin tail correction with a bounded remainder."""
    if not isinstance(s, int) or isinstance(s, bool) or s < 2:
        raise ValueError(f"riemann_zeta needs an integer argument >= 2, got {s!r}")
    return _zeta_cached(s, as_precision(prec).target_eps)


def eval_combination(
    c: IndexCombination, prec: Union[Precision, float] = Precision()
) -> ApproxValue:
    """Evaluate a Q-combination of admissible (or empty) indices.

    The per-term precision budget divides the target by both the total
    coefficient mass and the term count, so the accumulated error bound
    stays below the target.
    """
    eps = as_precision(prec).target_eps
    items = sorted(c.items(), key=lambda kc: (kc[0].weight, tuple(kc[0])))
    if not items:
        return ApproxValue(0.0, 0.0)
    for k, _ in items:
        if k and not k.admissible:
            raise ValueError(f"combination contains non-admissible index {k}")
    total_mass = float(sum(abs(coef) for _, coef in items))
    per = eps / max(1.0, total_mass * len(items))
    value = 0.0
    err = 0.0
    aval = 0.0
    for k, coef in items:
        term = mzv(k, per)
        fc = float(coef)
        value += fc * term.value
        aval += abs(fc * term.value)
        err += abs(fc) * term.err
        if fc not in (1.0, -1.0):  # products by +-1 are exact
            err += 2 * _U * abs(fc * term.value)
    if len(items) > 1:
        err += (len(items) + 2) * _U * aval
    return ApproxValue(value, err)


def mzv_star(k: Index, prec: Union[Precision, float] = Precision()) -> ApproxValue:
    """The nested weak zeta sum, via star expansion into strict values.

    The direct weak sum converges too slowly to certify tight bounds, so
    the expansion route is primary; ``mzv_star_partial_sum`` is kept as
    an independent low-weight cross-check.
    """
    k = Index(k)
    if not k:
        return ApproxValue(1.0, 0.0)
    if not k.admissible:
        raise ValueError(f"index {k} is not admissible (first part must be >= 2)")
    return eval_combination(star_expand(k), prec)


def mzv_partial_sum(k: Index, cutoff: int) -> float:
    """Plain truncated strict sum with the outer variable <= cutoff."""
    k = Index(k)
    if not k:
        return 1.0
    values, _ = _nested_partial_sums(tuple(k), cutoff)
    return values[1]


def mzv_star_partial_sum(k: Index, cutoff: int) -> float:
    """Plain truncated weak sum with the outer variable <= cutoff."""
    k = Index(k)
    if not k:
        return 1.0
    prev = [1.0] * (cutoff + 1)
    for s in reversed(tuple(k)):
        cur = [0.0] * (cutoff + 1)
        acc = 0.0
        for v in range(1, cutoff + 1):
            acc += prev[v] / v**s
            cur[v] = acc
        prev = cur
    return prev[cutoff]


def mzv_tail_bound(k: Index, cutoff: int) -> float:
    """Upper bound on the strict-sum truncation error at the cutoff:
    the integral of (1 + ln t)^(n-1) t^(-k_1) from the cutoff on.

    Requires the integrand to be decreasing there, i.e.
    n - 1 <= k_1 * (1 + ln cutoff).
    """
    k = Index(k)
    if not k.admissible:
        raise ValueError(f"index {k} is not admissible")
    k1, n = k[0], len(k)
    c = 1.0 + math.log(cutoff)
    if n - 1 > k1 * c:
        raise ValueError("cutoff too small for this depth; bound would not apply")
    x = (k1 - 1) * c
    term = 1.0
    total = 1.0
    for j in range(1, n):
        term *= x / j
        total += term
    return float(cutoff) ** (1 - k1) / (k1 - 1) ** n * total * math.factorial(n - 1)
