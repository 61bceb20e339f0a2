"""Exact evaluation of multiple zeta star values on 3-2-1 indices.

The package computes values like zeta*(3,1,...,3,1) and their even-block
relatives as exact rational multiples of powers of pi, by several
independent closed forms, and cross-checks them against each other and
against a direct numerical summation oracle.
"""

__version__ = "0.1.0"

from .exact_core import (  # noqa: F401
    BernoulliTable,
    GradingError,
    PiValue,
    Rational,
    bernoulli,
    bernoulli_table,
    beta_coeff,
    rational,
    zeta_even,
)
from .series import (  # noqa: F401
    GradedSeries,
    TruncationError,
    series_tanh_cot,
    zeta_star_4_series,
)
from .mzsv_eval import (  # noqa: F401
    bowman_bradley_Z,
    muneta_zeta_star_31,
    sum_formula,
    yamamoto_Zstar,
    zeta_2_pow,
    zeta_31_pow,
    zeta_star_2_pow,
    zeta_star_31_pow,
    zeta_star_31_pow_2,
    zstar,
    zstar0,
    zstar1,
)
from .cyclotomic import (  # noqa: F401
    CycloElement,
    RationalityViolation,
    cyclo_root_pow,
    cyclotomic_poly,
    t7_plain,
    t7_tail,
)
from .bell import (  # noqa: F401
    bell_plain,
    bell_tail,
    modified_bell,
    zeta_bar_even,
)
from .oracle import (  # noqa: F401
    A_num,
    DivergentIndexError,
    NumericConfig,
    NumericResult,
    mzsv_num,
)
from .index_parser import (  # noqa: F401
    Classification,
    IndexSyntaxError,
    classify,
    parse_index,
    render_index,
)
