from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerium.hparith import DomainError, EvalConfig
from eulerium.symbolic import (
    LOG2,
    ONE,
    PI,
    ZERO,
    DZeta,
    Eta,
    R,
    SymExpr,
    Ttilde2,
    Zeta,
    ZetaBar,
    eval_sym,
    normalize_even_zeta,
    parse_sym,
    sym_equal,
    ttilde2,
)

CFG = EvalConfig(digits=30, tol=1e-18)

atom_st = st.one_of(
    st.just(PI),
    st.just(LOG2),
    st.integers(2, 9).map(Zeta),
    st.integers(2, 9).map(Eta),
    st.integers(1, 6).map(lambda n: R(-n)),
    st.tuples(st.integers(2, 5), st.integers(1, 3)).map(lambda ab: DZeta(*ab)),
    st.tuples(st.integers(2, 5), st.integers(1, 3)).map(lambda ab: Ttilde2(*ab)),
    st.tuples(st.integers(2, 5), st.integers(1, 3)).map(lambda ab: ttilde2(*ab)),
)
coef_st = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@st.composite
def expr_st(draw):
    e = ZERO
    for _ in range(draw(st.integers(0, 4))):
        t = SymExpr.const(draw(coef_st))
        for a in draw(st.lists(atom_st, max_size=3)):
            t = t * a ** draw(st.integers(1, 3))
        e = e + t
    return e


@given(expr_st())
def test_render_parse_round_trip(e):
    assert parse_sym(e.render()) == e


@given(expr_st(), expr_st(), expr_st())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()
    assert a * ONE == a and a + ZERO == a


@settings(max_examples=25, deadline=None)
@given(expr_st())
def test_normalization_preserves_value(e):
    e = e.map_atoms(lambda at: None if at.kind in ("Pi", "Log2", "Zeta", "Eta", "Rbar") else ONE)
    with mpmath.workdps(40):
        assert abs(eval_sym(e, CFG) - eval_sym(normalize_even_zeta(e), CFG)) < 1e-20 * (1 + abs(eval_sym(e, CFG)))


def test_conventions():
    assert Zeta(0) == SymExpr.const(Fraction(-1, 2))
    assert Zeta(1).is_zero()
    assert R(1) == 2 * LOG2
    assert R(3) == 7 * Zeta(3)
    assert ZetaBar(2) == -Eta(2)
    assert ZetaBar(0) == SymExpr.const(Fraction(-1, 2))
    with pytest.raises(DomainError):
        R(0)


def test_normalize_even_zeta_rules():
    assert normalize_even_zeta(Zeta(2)) == Fraction(1, 6) * PI**2
    assert normalize_even_zeta(Eta(4)) == Fraction(7, 720) * PI**4
    assert normalize_even_zeta(Eta(1)) == LOG2
    assert normalize_even_zeta(Eta(3)) == Fraction(3, 4) * Zeta(3)
    assert normalize_even_zeta(R(-1)) == Fraction(-1, 2) * PI
    assert normalize_even_zeta(R(-3)) == Fraction(-1, 4) * PI**3
    assert normalize_even_zeta(R(-2)) == R(-2)
    assert sym_equal(Zeta(2) ** 2, Fraction(5, 2) * Zeta(4))


def test_render_examples():
    assert (7 * Zeta(3) - 6 * Zeta(2) * LOG2).render() == "7 z3 - 6 z2 log2"
    assert parse_sym("1/6 pi^6 + zbar3 - R~4 + z3_2") == Fraction(1, 6) * PI**6 + Eta(3) - R(-4) + DZeta(3, 2)
    assert parse_sym("0").is_zero()


@pytest.mark.parametrize("bad", ["z3 +", "foo", "3 ^2", "+ - z2", "z2 - - z3", "+z2"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_sym(bad)


def test_coefficient_and_atoms():
    e = 3 * Zeta(3) * LOG2 + PI**2
    assert e.coefficient(Zeta(3), LOG2) == 3
    assert e.coefficient(PI**2) == 1
    assert {a.kind for a in e.atoms()} == {"Zeta", "Log2", "Pi"}


def test_eval_matches_mpmath():
    with mpmath.workdps(40):
        v = eval_sym(112 * Zeta(3) ** 2 - Fraction(1, 6) * PI**6, CFG)
        assert abs(v - (112 * mpmath.zeta(3) ** 2 - mpmath.pi**6 / 6)) < 1e-25
        assert abs(eval_sym(R(-2), CFG) + 4 * mpmath.catalan) < 1e-25
