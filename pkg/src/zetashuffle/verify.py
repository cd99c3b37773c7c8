"""Identity suite: exact word-algebra checks and rigorous numeric checks.

Exact checks compare two polynomial constructions term by term; they
pass only when the difference is the zero polynomial, and a failing
check carries the exact discrepancy terms.  Numeric checks compare two
evaluations and pass when the residual fits inside its accumulated
error bound plus the user tolerance (widened to three times the bound
so legitimate roundoff inside the rigor envelope never fails a check).

All checks are pure; the suite runner never aborts on a failure and
returns results merged deterministically by (name, params).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .morphisms import IndexCombination, dual_index, sigma_m, smap
from .numerics import (
    ApproxValue,
    Precision,
    PrecisionError,
    as_precision,
    eval_combination,
    mzv,
    mzv_star,
    riemann_zeta,
)
from .series import eval_zeta_poly, star_difference_certificate
from .words import (
    Index,
    Poly,
    Word,
    admissible_indices,
    compositions,
    shuffle,
    weak_compositions,
    word_from_index,
)

__all__ = [
    "CheckResult",
    "check_star_expansion",
    "check_weighted_sum",
    "check_alternating_shuffle",
    "check_alternating_shuffle_dual",
    "check_duality",
    "check_ohno",
    "check_sum_formula",
    "check_star_composition",
    "check_star_hook_expansion",
    "check_star_duality",
    "check_height_one_ohno",
    "run_suite",
    "render_text",
    "render_json",
    "dumps_precise",
    "ALL_CHECKS",
]


@dataclass
class CheckResult:
    """Outcome of a single identity check.

    Exact checks pass iff ``detail`` (the difference polynomial) is
    zero; numeric checks pass iff |residual.value| <= residual.err +
    tolerance.
    """

    name: str
    params: dict
    kind: str  # "exact" | "numeric"
    passed: bool
    residual: Optional[ApproxValue] = None
    tolerance: Optional[float] = None
    detail: object = None
    note: str = ""

    def to_dict(self) -> dict:
        detail_terms: list = []
        if self.detail is not None and self.detail:
            detail_terms = [
                piece for piece in str(self.detail).replace("- ", "+ -").split(" + ")
            ]
        return {
            "name": self.name,
            "params": dict(self.params),
            "kind": self.kind,
            "passed": self.passed,
            "residual_value": None if self.residual is None else self.residual.value,
            "residual_err": None if self.residual is None else self.residual.err,
            "detail_terms": detail_terms,
            "tolerance": self.tolerance,
            "note": self.note,
        }


def _zword(*parts: int) -> Word:
    return word_from_index(Index(parts))


def _ones(count: int) -> tuple:
    return (1,) * count


def _exact(name: str, params: dict, diff: Poly, note: str = "") -> CheckResult:
    return CheckResult(
        name=name,
        params=params,
        kind="exact",
        passed=not diff,
        detail=diff,
        note=note,
    )


def _numeric(
    name: str,
    params: dict,
    residual: ApproxValue,
    eps: float,
    note: str = "",
    extra_ok: bool = True,
    detail: object = None,
) -> CheckResult:
    tol = max(eps, 3.0 * residual.err)
    passed = extra_ok and abs(residual.value) <= residual.err + tol
    return CheckResult(
        name=name,
        params=params,
        kind="numeric",
        passed=passed,
        residual=residual,
        tolerance=tol,
        detail=detail,
        note=note,
    )


# ---------------------------------------------------------------------------
# exact checks


def check_star_expansion(k: int, n: int) -> CheckResult:
    """Applying sigma to all letters but the last of z_{k+1} z_1^n equals
    the double sum over weak compositions a_1+...+a_t = n+1-t of the
    words z_{a_t+k+1} z_{a_1+1} ... z_{a_t-1 + 1}."""
    lhs = smap(_zword(k + 1, *_ones(n)))
    rhs = Poly()
    for t in range(1, n + 2):
        for a in weak_compositions(n + 1 - t, t):
            rhs = rhs + Poly.of_word(
                _zword(a[t - 1] + k + 1, *(ai + 1 for ai in a[: t - 1]))
            )
    return _exact("star-expansion", {"k": k, "n": n}, lhs - rhs)


def _weighted_side(k: int, n: int) -> Poly:
    out = Poly()
    for a in weak_compositions(n, k):
        out = out + (a[k - 1] + 1) * Poly.of_word(
            _zword(a[k - 1] + 2, *(ai + 1 for ai in a[: k - 1]))
        )
    return out


def _staircase_side(k: int, n: int) -> Poly:
    out = Poly()
    for t in range(1, n + 2):
        for a in weak_compositions(n + 1 - t, k):
            out = out + Poly.of_word(
                _zword(a[k - 1] + t + 1, *(ai + 1 for ai in a[: k - 1]))
            )
    return out


def check_weighted_sum(k: int, n: int) -> CheckResult:
    """The (a_k+1)-weighted composition sum equals the staircase sum over
    t of the same words with the head raised by t instead."""
    return _exact(
        "weighted-sum", {"k": k, "n": n}, _weighted_side(k, n) - _staircase_side(k, n)
    )


def _alt_shuffle_lhs(k: int, n: int) -> Poly:
    out = Poly()
    for r in range(k - 1):
        term = shuffle(_zword(k - r), _zword(r + 2, *_ones(n - 1)))
        out = out + ((-1) ** r) * term
    return out


def _alt_shuffle_rhs(k: int, n: int) -> Poly:
    # Closed form of the alternating shuffle sum.  The middle-block
    # composition sum excludes tuples containing a part equal to
    # p-m-s+4: given the fixed total and part count those are exactly
    # the tuples with a single part above 1, which the first two pieces
    # already enumerate.  Empty ranges contribute zero.
    out = Poly()
    for i in range(3, n + 2):
        weight_i = n + 2 - i
        for s in range(2, k + 1):
            for m in range(2, k - s + 3):
                block = Poly()
                for p in range(2, k - s - m + 4):
                    for j in range(i - 3):
                        block = block + Poly.of_word(
                            _zword(k - p - s - m + 4, *_ones(j), p, *_ones(i - 4 - j))
                        )
                block = block + Poly.of_word(_zword(k - s - m + 3, *_ones(i - 3)))
                for p in range(s + m - 1, k):
                    banned = p - m - s + 4
                    for alpha in compositions(p + i - m - s, i - 3):
                        if banned in alpha:
                            continue
                        block = block + Poly.of_word(_zword(k - p, *alpha))
                for w, c in block.items():
                    word = _zword(s).concat(w).concat(_zword(m, *_ones(n + 1 - i)))
                    out = out + Poly.of_word(word, weight_i * c)
    v_coeff = n + (-1) ** k
    for a in range(2, k + 1):
        out = out + v_coeff * Poly.of_word(_zword(a, k + 2 - a, *_ones(n - 1)))
    w_coeff = (1 + (-1) ** k) * (n + 1)
    if w_coeff:
        out = out + w_coeff * Poly.of_word(_zword(k + 1, *_ones(n)))
    return out


def check_alternating_shuffle(k: int, n: int) -> CheckResult:
    """The alternating sum of single-block shuffles, computed with the
    recursive shuffle product (the trusted side), equals its closed
    form; any nonzero difference is reported, never patched."""
    return _exact(
        "alternating-shuffle",
        {"k": k, "n": n},
        _alt_shuffle_lhs(k, n) - _alt_shuffle_rhs(k, n),
    )


def _alt_shuffle_dual_lhs(k: int, n: int) -> Poly:
    out = Poly()
    for r in range(k - 1):
        term = shuffle(_zword(2, *_ones(k - r - 2)), _zword(n + 1, *_ones(r)))
        out = out + ((-1) ** r) * term
    return out


def _alt_shuffle_dual_rhs(k: int, n: int) -> Poly:
    out = _weighted_side(k, n)
    sign = (-1) ** k
    for q in range(k - 1):
        out = out + sign * Poly.of_word(_zword(n + 1, *_ones(q), 2, *_ones(k - 2 - q)))
    out = out + sign * (n + 1) * Poly.of_word(_zword(n + 2, *_ones(k - 1)))
    return out


def check_alternating_shuffle_dual(k: int, n: int) -> CheckResult:
    """Mirror image of the alternating shuffle identity: the hook-shaped
    closed form for shuffles of z_2 z_1^* against z_{n+1} z_1^*."""
    return _exact(
        "alternating-shuffle-dual",
        {"k": k, "n": n},
        _alt_shuffle_dual_lhs(k, n) - _alt_shuffle_dual_rhs(k, n),
    )


# ---------------------------------------------------------------------------
# numeric checks


def _ohno_residual(k: Index, l: int, eps: float) -> ApproxValue:
    lhs = eval_combination(sigma_m(l, k), eps)
    rhs = eval_combination(sigma_m(l, dual_index(k)), eps)
    return lhs.sub(rhs)


def check_duality(k: Index, prec: Union[Precision, float] = Precision()) -> CheckResult:
    """Value at an admissible index equals the value at its dual."""
    k = Index(k)
    eps = as_precision(prec).target_eps
    residual = _ohno_residual(k, 0, eps)
    return _numeric("duality", {"k": str(k), "dual": str(dual_index(k))}, residual, eps)


def check_ohno(
    k: Index, l: int, prec: Union[Precision, float] = Precision()
) -> CheckResult:
    """Weight-raised duality: distributing l extra weight over an index
    and over its dual yields equal sums; l = 0 is plain duality."""
    k = Index(k)
    eps = as_precision(prec).target_eps
    residual = _ohno_residual(k, l, eps)
    return _numeric("ohno", {"k": str(k), "l": l}, residual, eps)


def check_sum_formula(
    w: int, d: int, prec: Union[Precision, float] = Precision()
) -> CheckResult:
    """All admissible indices of fixed weight and depth sum to the zeta
    value at the weight."""
    if not w > d >= 1:
        raise ValueError("need weight > depth >= 1")
    eps = as_precision(prec).target_eps
    combo = IndexCombination({idx: 1 for idx in admissible_indices(w) if idx.depth == d})
    lhs = eval_combination(combo, eps)
    residual = lhs.sub(riemann_zeta(w, eps))
    return _numeric("sum-formula", {"w": w, "d": d}, residual, eps)


def _star_composition_sides(k: int, n: int):
    staircase: dict = {}
    for t in range(1, n + 2):
        for a in weak_compositions(n + 1 - t, k):
            idx = Index((a[k - 1] + t + 1,) + tuple(ai + 1 for ai in a[: k - 1]))
            staircase[idx] = staircase.get(idx, 0) + 1
    weighted: dict = {}
    for a in weak_compositions(n, k):
        idx = Index((a[k - 1] + 2,) + tuple(ai + 1 for ai in a[: k - 1]))
        weighted[idx] = weighted.get(idx, 0) + a[k - 1] + 1
    return IndexCombination(staircase), IndexCombination(weighted)


def check_star_composition(
    k: int, n: int, prec: Union[Precision, float] = Precision()
) -> CheckResult:
    """The star value at (k+1, 1^n) equals both composition-sum closed
    forms; the two closed forms must also agree exactly as index
    combinations."""
    eps = as_precision(prec).target_eps
    staircase, weighted = _star_composition_sides(k, n)
    exact_diff = staircase - weighted
    lhs = mzv_star(Index((k + 1,) + _ones(n)), eps)
    residual = lhs.sub(eval_combination(weighted, eps))
    return _numeric(
        "star-composition",
        {"k": k, "n": n},
        residual,
        eps,
        extra_ok=not exact_diff,
        detail=exact_diff if exact_diff else None,
    )


def check_star_hook_expansion(
    k: int, n: int, prec: Union[Precision, float] = Precision()
) -> CheckResult:
    """The star value at (k+1, 1^n) equals the signed sum of hook-shaped
    strict values plus alternating products of a zeta value with a
    height-one value."""
    eps = as_precision(prec).target_eps
    sub = eps / (8.0 * (k + n + 2))
    lhs = mzv_star(Index((k + 1,) + _ones(n)), sub)
    bracket = ApproxValue(0.0, 0.0)
    for q in range(k - 1):
        bracket = bracket.add(mzv(Index((n + 1,) + _ones(q) + (2,) + _ones(k - 2 - q)), sub))
    bracket = bracket.add(mzv(Index((n + 2,) + _ones(k - 1)), sub).scale(n + 1))
    rhs = bracket.scale((-1) ** (k - 1))
    for r in range(k - 1):
        prod = riemann_zeta(k - r, sub).mul(mzv(Index((n + 1,) + _ones(r)), sub))
        rhs = rhs.add(prod.scale((-1) ** r))
    residual = lhs.sub(rhs)
    return _numeric(
        "star-hook",
        {"k": k, "n": n},
        residual,
        eps,
        note="product terms use the duality value zeta(2,1^j) = zeta(j+2)",
    )


def check_star_duality(
    k: int, n: int, prec: Union[Precision, float] = Precision()
) -> CheckResult:
    """The alternating difference of the two mirror star values equals
    its closed form in strict values and zeta products, and matches the
    exact certificate polynomial numerically."""
    eps = as_precision(prec).target_eps
    sub = eps / (8.0 * (k + n + 2))
    lhs = mzv_star(Index((k + 1,) + _ones(n)), sub).scale((-1) ** k)
    lhs = lhs.sub(mzv_star(Index((n + 1,) + _ones(k)), sub).scale((-1) ** n))
    rhs = mzv(Index((k + 2,) + _ones(n - 1)), sub).scale(k)
    rhs = rhs.sub(mzv(Index((n + 2,) + _ones(k - 1)), sub).scale(n))
    sk = (-1) ** k
    for r in range(k - 1):
        prod = riemann_zeta(k - r, sub).mul(mzv(Index((n + 1,) + _ones(r)), sub))
        rhs = rhs.add(prod.scale(sk * (-1) ** r))
    sn = (-1) ** n
    for r in range(n - 1):
        prod = riemann_zeta(n - r, sub).mul(mzv(Index((k + 1,) + _ones(r)), sub))
        rhs = rhs.sub(prod.scale(sn * (-1) ** r))
    residual = lhs.sub(rhs)
    cert = eval_zeta_poly(star_difference_certificate(k, n), sub)
    cert_residual = lhs.sub(cert)
    cert_ok = abs(cert_residual.value) <= cert_residual.err + max(
        eps, 3.0 * cert_residual.err
    )
    return _numeric(
        "star-duality",
        {"k": k, "n": n},
        residual,
        eps,
        extra_ok=cert_ok,
        note=f"certificate residual {cert_residual.value:.3e} (err {cert_residual.err:.3e})",
    )


def check_height_one_ohno(
    k: int, n: int, prec: Union[Precision, float] = Precision()
) -> CheckResult:
    """Weight-raised duality with shift 1 on the height-one index
    (k+1, 1^(n-1)), whose dual is (n+1, 1^(k-1))."""
    eps = as_precision(prec).target_eps
    residual = _ohno_residual(Index((k + 1,) + _ones(n - 1)), 1, eps)
    return _numeric("height-one-ohno", {"k": k, "n": n}, residual, eps)


def _check_selfcheck_fail(prec: Union[Precision, float] = Precision()) -> CheckResult:
    """Deliberately false identity (zeta(2) = zeta(3)); exercises the
    failure path and the nonzero exit code."""
    eps = as_precision(prec).target_eps
    residual = riemann_zeta(2, eps).sub(riemann_zeta(3, eps))
    return _numeric("selfcheck-fail", {}, residual, eps)


# ---------------------------------------------------------------------------
# suite runner


def _grid_exact(fn):
    def run(kmax, nmax, eps):
        for k in range(1, kmax + 1):
            for n in range(1, nmax + 1):
                yield fn(k, n)

    return run


def _grid_numeric_kn(fn):
    def run(kmax, nmax, eps):
        for k in range(1, kmax + 1):
            for n in range(1, nmax + 1):
                yield fn(k, n, eps)

    return run


def _suite_indices(kmax: int):
    for w in range(2, kmax + 1):
        yield from admissible_indices(w)


def _run_duality(kmax, nmax, eps):
    for idx in _suite_indices(kmax):
        yield check_duality(idx, eps)


def _run_ohno(kmax, nmax, eps):
    for idx in _suite_indices(kmax):
        for l in range(nmax + 1):
            yield check_ohno(idx, l, eps)


def _run_sum_formula(kmax, nmax, eps):
    for w in range(2, kmax + 2):
        for d in range(1, w):
            yield check_sum_formula(w, d, eps)


def _run_selfcheck_fail(kmax, nmax, eps):
    yield _check_selfcheck_fail(eps)


_REGISTRY = {
    "star-expansion": _grid_exact(check_star_expansion),
    "weighted-sum": _grid_exact(check_weighted_sum),
    "alternating-shuffle": _grid_exact(check_alternating_shuffle),
    "alternating-shuffle-dual": _grid_exact(check_alternating_shuffle_dual),
    "duality": _run_duality,
    "ohno": _run_ohno,
    "sum-formula": _run_sum_formula,
    "star-composition": _grid_numeric_kn(check_star_composition),
    "star-hook": _grid_numeric_kn(check_star_hook_expansion),
    "star-duality": _grid_numeric_kn(check_star_duality),
    "height-one-ohno": _grid_numeric_kn(check_height_one_ohno),
    "selfcheck-fail": _run_selfcheck_fail,
}

# every advertised check; the failure probe must be requested explicitly
ALL_CHECKS = tuple(name for name in _REGISTRY if name != "selfcheck-fail")


def run_suite(
    kmax: int,
    nmax: int,
    prec: Union[Precision, float] = Precision(),
    which: Optional[Iterable[str]] = None,
) -> list:
    """Run the selected checks over the (k, n) grid; index-parameterized
    checks draw from all admissible indices of weight <= kmax.

    Returns every result (never aborts on a failure), ordered
    deterministically by (name, params).
    """
    if kmax < 0 or nmax < 0:
        raise ValueError("kmax and nmax must be >= 0")
    eps = as_precision(prec).target_eps
    names = list(which) if which is not None else list(ALL_CHECKS)
    for name in names:
        if name not in _REGISTRY:
            raise ValueError(f"unknown check name {name!r} (known: {', '.join(_REGISTRY)})")
    results: list = []
    for name in names:
        try:
            results.extend(_REGISTRY[name](kmax, nmax, eps))
        except PrecisionError as exc:
            results.append(
                CheckResult(
                    name=name,
                    params={"kmax": kmax, "nmax": nmax},
                    kind="numeric",
                    passed=False,
                    note=f"precision failure: {exc}",
                )
            )
    results.sort(key=lambda r: (r.name, sorted((k, str(v)) for k, v in r.params.items())))
    return results


# ---------------------------------------------------------------------------
# report rendering


def dumps_precise(obj) -> str:
    """JSON text with floats rendered at 17 significant digits."""
    if isinstance(obj, float):
        return f"{obj:.16e}"
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps_precise(v) for v in obj) + "]"
    if isinstance(obj, dict):
        return (
            "{"
            + ", ".join(f"{json.dumps(str(k))}: {dumps_precise(v)}" for k, v in obj.items())
            + "}"
        )
    return json.dumps(str(obj))


def render_json(results: Sequence[CheckResult]) -> str:
    return dumps_precise([r.to_dict() for r in results])


def render_text(results: Sequence[CheckResult]) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        params = ",".join(f"{k}={v}" for k, v in r.params.items())
        if r.kind == "numeric" and r.residual is not None:
            tail = f"residual {r.residual.value: .3e} (err {r.residual.err:.2e}, tol {r.tolerance:.2e})"
        elif r.kind == "exact":
            tail = "difference 0" if r.passed else f"difference {r.detail}"
        else:
            tail = r.note
        lines.append(f"{status}  {r.name:<26} {params:<24} {r.kind:<8} {tail}")
    total = len(results)
    failed = sum(1 for r in results if not r.passed)
    lines.append(f"{total} checks, {total - failed} passed, {failed} failed")
    return "\n".join(lines)
