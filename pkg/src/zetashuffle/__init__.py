"""Exact shuffle-algebra workbench for multiple zeta values.

Words over {x, y} with the shuffle product and exact rational
coefficients; the substitution and mirror maps realizing duality and
star expansion; rigorous floating evaluation of strict and weak nested
zeta sums; a generating-function engine expressing height-one values as
polynomials in zeta symbols; and a verification suite for the
structural and numerical identities tying these together.
"""

from .words import (
    Index,
    IndexSyntaxError,
    Letter,
    Poly,
    Word,
    admissible_indices,
    as_poly,
    index_from_word,
    index_stats,
    parse_index,
    parse_word,
    shuffle,
    shuffle_poly,
    shuffle_single_z,
    word_from_index,
)
from .morphisms import (
    IndexCombination,
    dual_index,
    dual_index_blocks,
    sigma,
    sigma_inv,
    sigma_m,
    smap,
    smap_inv,
    star_expand,
    tau,
)
from .numerics import (
    ApproxValue,
    Precision,
    PrecisionError,
    eval_combination,
    mzv,
    mzv_partial_sum,
    mzv_star,
    mzv_star_partial_sum,
    mzv_tail_bound,
    riemann_zeta,
)
from .series import (
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
from .verify import (
    ALL_CHECKS,
    CheckResult,
    check_alternating_shuffle,
    check_alternating_shuffle_dual,
    check_duality,
    check_height_one_ohno,
    check_ohno,
    check_star_composition,
    check_star_duality,
    check_star_expansion,
    check_star_hook_expansion,
    check_sum_formula,
    check_weighted_sum,
    render_json,
    render_text,
    run_suite,
)

__version__ = "0.1.0"
