from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerium import identities as ids
from eulerium.genfunc import (
    MAX_DEGREE,
    BiSeries,
    height_one_gf,
    height_one_index,
    height_one_mrv,
    series_exp,
)
from eulerium.hparith import EvalConfig
from eulerium.sums import mrv
from eulerium.symbolic import LOG2, ONE, PI, SymExpr, Zeta, eval_sym, sym_equal

coef_st = st.fractions(min_value=-5, max_value=5, max_denominator=6).map(SymExpr.const)


@st.composite
def series_st(draw, degree=5):
    coeffs = {}
    for m in range(degree + 1):
        for n in range(degree + 1 - m):
            if (m, n) != (0, 0) and draw(st.booleans()):
                coeffs[(m, n)] = draw(coef_st)
    return BiSeries(degree, coeffs)


@settings(max_examples=30, deadline=None)
@given(series_st())
def test_exp_of_negation_is_inverse(a):
    assert series_exp(a) * series_exp(-a) == BiSeries.one(a.degree)


@settings(max_examples=20, deadline=None)
@given(series_st(), series_st())
def test_exp_is_additive(a, b):
    assert series_exp(a + b) == series_exp(a) * series_exp(b)


def test_exp_symbolic_coefficients():
    a = BiSeries(4, {(0, 1): LOG2, (1, 0): Zeta(2)})
    e = series_exp(a)
    assert e[(0, 3)] == Fraction(1, 6) * LOG2**3
    assert e[(1, 1)] == Zeta(2) * LOG2
    assert e[(2, 2)] == Fraction(1, 4) * Zeta(2) ** 2 * LOG2**2


def test_exp_requires_zero_constant():
    with pytest.raises(ValueError):
        series_exp(BiSeries.one(3))


def test_truncation_and_arithmetic():
    x = BiSeries(3, {(1, 0): ONE})
    assert (x * x * x * x).coeffs == {}
    assert (x + x)[(1, 0)] == SymExpr.const(2)
    assert (x - x) == BiSeries.zero(3)
    assert (BiSeries(2, {}) + BiSeries(5, {(4, 0): ONE})).degree == 2


def test_axis_slices_vanish():
    # the generating function only has terms with m, n >= 1
    gf = height_one_gf(MAX_DEGREE)
    for k in range(MAX_DEGREE + 1):
        assert gf[(0, k)].is_zero()
        assert gf[(k, 0)].is_zero()


def test_lowest_coefficient():
    assert height_one_mrv(1, 1) == 3 * Zeta(2)
    assert height_one_index(1, 1) == (2,)
    assert height_one_index(2, 3) == (3, 1, 1)


@pytest.mark.parametrize("rec", [r for r in ids.example_catalog() if r.lhs.startswith("MRV")], ids=lambda r: r.name)
def test_matches_catalog_symbolically(rec):
    ks = rec.lhs_spec().ks
    assert sym_equal(height_one_mrv(ks[0] - 1, len(ks)), rec.rhs)


@pytest.mark.parametrize("m,n", [(1, 2), (2, 2), (3, 1), (1, 4)])
def test_numeric(m, n):
    cfg = EvalConfig()
    with mpmath.workdps(cfg.work_dps):
        assert abs(mrv(height_one_index(m, n), cfg).value - eval_sym(height_one_mrv(m, n), cfg)) < 1e-8


def test_degree_bounds():
    with pytest.raises(ValueError):
        height_one_gf(1)
    with pytest.raises(ValueError):
        height_one_gf(MAX_DEGREE + 1)
    with pytest.raises(ValueError):
        height_one_mrv(3, 4)
    with pytest.raises(ValueError):
        height_one_mrv(0, 2)


def test_degree_consistency():
    g6, g8 = height_one_gf(6), height_one_gf(8)
    assert all(g8[k] == c for k, c in g6.coeffs.items())
    assert not PI.is_zero()
