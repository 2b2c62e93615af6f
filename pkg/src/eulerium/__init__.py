"""Euler R-sums, multiple R-values and their residue identities.

Quick tour::

    >>> from eulerium import EvalConfig, SumSpec, euler_sum, mrv
    >>> cfg = EvalConfig(digits=30, tol=1e-15)
    >>> float(mrv((2, 1), cfg).value)          # 7 zeta(3) - 6 zeta(2) log 2
    1.57...
"""

from .accel import ConvergenceError, SeriesResult, sum_series
from .genfunc import BiSeries, height_one_gf, height_one_mrv, series_exp
from .hparith import DEFAULT, BigReal, DomainError, EvalConfig, r_single, zeta_int
from .identities import (
    IdentityCheck,
    IdentityRecord,
    example_catalog,
    linear_rsum_closed,
    quasi_shuffle_expand,
    theorem31_residual,
    theorem33_residual,
    theorem34_residual,
    triple_reduction,
)
from .parser import SpecParseError, parse_spec, render_spec
from .sequences import A1, A2, FunctionalKind, LaurentProbe, Seq, cot_param, psi_param, seq_functional
from .sums import HarmonicFactor, InadmissibleIndex, MRVIndex, SumSpec, double_value, euler_sum, mrv, mzv
from .symbolic import SymExpr, eval_sym, normalize_even_zeta, parse_sym, sym_equal

__version__ = "0.1.0"

__all__ = [
    "A1", "A2", "BigReal", "BiSeries", "ConvergenceError", "DEFAULT", "DomainError", "EvalConfig",
    "FunctionalKind", "HarmonicFactor", "IdentityCheck", "IdentityRecord", "InadmissibleIndex",
    "LaurentProbe", "MRVIndex", "Seq", "SeriesResult", "SpecParseError", "SumSpec", "SymExpr",
    "cot_param", "double_value", "euler_sum", "eval_sym", "example_catalog", "height_one_gf",
    "height_one_mrv", "linear_rsum_closed", "mrv", "mzv", "normalize_even_zeta", "parse_spec",
    "parse_sym", "psi_param", "quasi_shuffle_expand", "r_single", "render_spec", "seq_functional",
    "series_exp", "sum_series", "sym_equal", "theorem31_residual", "theorem33_residual",
    "theorem34_residual", "triple_reduction", "zeta_int",
]
