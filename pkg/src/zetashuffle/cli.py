"""Command-line front end.

Verbs map one-to-one onto library operations; output is UTF-8 text or
JSON.  Exit codes: 0 on success, 1 when a verification check fails,
2 on usage errors (bad syntax, invalid arguments, unreachable
precision).  Numeric output always carries its error bound.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .morphisms import IndexCombination, dual_index, sigma_m, smap, star_expand
from .numerics import PrecisionError, mzv, mzv_star
from .series import eval_zeta_poly, height_one_gf, star_difference_certificate
from .verify import ALL_CHECKS, dumps_precise, render_json, render_text, run_suite
from .words import (
    Index,
    IndexSyntaxError,
    Poly,
    Word,
    parse_index,
    parse_word,
    shuffle_poly,
    word_from_index,
)


def _parse_operand(text: str):
    """An operand is an index like '(3,1)' or a word like 'xxy' (or '1')."""
    text = text.strip()
    if text.startswith("("):
        return parse_index(text)
    return parse_word(text)


def _operand_word(operand) -> Word:
    return word_from_index(operand) if isinstance(operand, Index) else operand


def _render_poly(poly: Poly, as_indices: bool) -> str:
    if as_indices and all(w.in_h1() for w in poly.terms):
        return IndexCombination.from_poly(poly).text()
    return poly.text()


def cmd_shuffle(args) -> int:
    a, b = _parse_operand(args.left), _parse_operand(args.right)
    result = shuffle_poly(_operand_word(a), _operand_word(b))
    as_indices = isinstance(a, Index) and isinstance(b, Index)
    text = _render_poly(result, as_indices)
    if args.format == "json":
        print(dumps_precise({"result": text}))
    else:
        print(text)
    return 0


def cmd_dual(args) -> int:
    k = parse_index(args.index)
    print(str(dual_index(k)))
    return 0


def cmd_star_expand(args) -> int:
    combo = star_expand(parse_index(args.index))
    if args.format == "json":
        print(dumps_precise({"result": combo.text()}))
    else:
        print(combo.text())
    return 0


def cmd_smap(args) -> int:
    operand = _parse_operand(args.operand)
    result = smap(_operand_word(operand))
    text = _render_poly(result, isinstance(operand, Index))
    if args.format == "json":
        print(dumps_precise({"result": text}))
    else:
        print(text)
    return 0


def cmd_sigma_m(args) -> int:
    if args.m < 0:
        raise ValueError("m must be >= 0")
    combo = sigma_m(args.m, parse_index(args.index))
    if args.format == "json":
        print(dumps_precise({"result": combo.text()}))
    else:
        print(combo.text())
    return 0


def _print_value(av, args) -> None:
    if args.format == "json":
        print(av.json())
    else:
        print(str(av))


def cmd_eval(args) -> int:
    _print_value(mzv(parse_index(args.index), args.eps), args)
    return 0


def cmd_eval_star(args) -> int:
    _print_value(mzv_star(parse_index(args.index), args.eps), args)
    return 0


def cmd_gf(args) -> int:
    gf = height_one_gf(args.order)
    entries = []
    for k in range(1, args.order):
        for n in range(1, args.order + 1 - k):
            entries.append((k, n, gf.coefficient(k, n)))
    if args.format == "json":
        payload = [
            {"k": k, "n": n, "poly": poly.json_records()} for k, n, poly in entries
        ]
        print(dumps_precise({"order": args.order, "coefficients": payload}))
    else:
        for k, n, poly in entries:
            print(f"({k},{n}): {poly.text()}")
    return 0


def cmd_certificate(args) -> int:
    poly = star_difference_certificate(args.k, args.n)
    value = eval_zeta_poly(poly, args.eps)
    if args.format == "json":
        print(
            dumps_precise(
                {
                    "k": args.k,
                    "n": args.n,
                    "poly": poly.json_records(),
                    "value": value.value,
                    "err": value.err,
                }
            )
        )
    else:
        print(f"certificate: {poly.text()}")
        print(f"value: {value}")
    return 0


def cmd_verify(args) -> int:
    which = None
    if args.checks != "all":
        which = [name.strip() for name in args.checks.split(",") if name.strip()]
    results = run_suite(args.kmax, args.nmax, args.eps, which)
    if args.format == "json":
        print(render_json(results))
    else:
        print(render_text(results))
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetashuffle",
        description=(
            "Exact shuffle-algebra workbench for multiple zeta values: "
            "word operations, duality maps, rigorous evaluation, and an "
            "identity verification suite."
        ),
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p, eps=True):
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )
        if eps:
            p.add_argument(
                "--eps", type=float, default=1e-6, help="target absolute error bound"
            )

    p = sub.add_parser("shuffle", help="shuffle product of two indices or words")
    p.add_argument("left")
    p.add_argument("right")
    add_common(p, eps=False)
    p.set_defaults(func=cmd_shuffle)

    p = sub.add_parser("dual", help="dual of an admissible index")
    p.add_argument("index")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("star-expand", help="expand a star value into strict values")
    p.add_argument("index")
    add_common(p, eps=False)
    p.set_defaults(func=cmd_star_expand)

    p = sub.add_parser("smap", help="apply sigma to all letters except the last")
    p.add_argument("operand", help="an index '(k1,...)' or a word over x/y")
    add_common(p, eps=False)
    p.set_defaults(func=cmd_smap)

    p = sub.add_parser("sigma-m", help="distribute extra weight m over an index")
    p.add_argument("m", type=int)
    p.add_argument("index")
    add_common(p, eps=False)
    p.set_defaults(func=cmd_sigma_m)

    p = sub.add_parser("eval", help="evaluate the strict nested sum at an index")
    p.add_argument("index")
    add_common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("eval-star", help="evaluate the weak nested sum at an index")
    p.add_argument("index")
    add_common(p)
    p.set_defaults(func=cmd_eval_star)

    p = sub.add_parser(
        "gf", help="height-one generating function coefficients up to an order"
    )
    p.add_argument("order", type=int)
    add_common(p, eps=False)
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser(
        "certificate",
        help="zeta-polynomial certificate for the alternating star difference",
    )
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    add_common(p)
    p.set_defaults(func=cmd_certificate)

    p = sub.add_parser("verify", help="run the identity verification suite")
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument(
        "--checks",
        default="all",
        help=(
            "comma-separated check names (default: all); known names: "
            + ", ".join(ALL_CHECKS)
            + ", selfcheck-fail (a deliberately false identity for exit-code tests)"
        ),
    )
    add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except IndexSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, PrecisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
