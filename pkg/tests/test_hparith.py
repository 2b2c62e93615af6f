from fractions import Fraction
from math import comb

import mpmath
import pytest

from eulerium.hparith import (
    DEFAULT,
    DomainError,
    EvalConfig,
    beta_dirichlet,
    bernoulli,
    const_log2,
    const_pi,
    eta_int,
    even_zeta_rational,
    r_single,
    rounded,
    zeta_conv,
    zeta_even_closed,
    zeta_int,
)
from oracles import log2_series, machin_pi

CFG60 = EvalConfig(digits=60, tol=1e-50)


def test_pi_matches_machin():
    with mpmath.workdps(70):
        assert abs(const_pi(CFG60) - machin_pi(70)) < mpmath.mpf(10) ** -65


def test_log2_matches_atanh_series():
    with mpmath.workdps(70):
        assert abs(const_log2(CFG60) - log2_series(70)) < mpmath.mpf(10) ** -65


def test_zeta3_against_apery_series():
    # zeta(3) = 5/2 sum (-1)^(k+1) / (k^3 binom(2k, k)), summed exactly
    s = sum(Fraction((-1) ** (k + 1), k**3 * comb(2 * k, k)) for k in range(1, 120))
    with mpmath.workdps(70):
        ref = mpmath.mpf(5 * s.numerator) / (2 * s.denominator)
        assert abs(zeta_int(3, CFG60) - ref) < mpmath.mpf(10) ** -60


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12])
def test_even_zeta_series_vs_bernoulli_closed_form(n):
    with mpmath.workdps(70):
        assert abs(zeta_int(n, CFG60) - zeta_even_closed(n, CFG60)) < mpmath.mpf(10) ** -60


@pytest.mark.parametrize("n,frac", [(2, Fraction(1, 6)), (4, Fraction(1, 90)), (6, Fraction(1, 945))])
def test_even_zeta_rational(n, frac):
    assert even_zeta_rational(n) == frac


def test_bernoulli_values():
    assert [bernoulli(n) for n in range(7)] == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42)]


@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_eta_zeta_relation_and_mpmath(n):
    with mpmath.workdps(70):
        assert abs(eta_int(n, CFG60) - (1 - mpmath.mpf(2) ** (1 - n)) * mpmath.zeta(n)) < mpmath.mpf(10) ** -60


def test_beta_values():
    with mpmath.workdps(70):
        assert abs(beta_dirichlet(1, CFG60) - machin_pi(70) / 4) < mpmath.mpf(10) ** -60
        assert abs(beta_dirichlet(2, CFG60) - mpmath.catalan) < mpmath.mpf(10) ** -60
        assert abs(beta_dirichlet(3, CFG60) - machin_pi(70) ** 3 / 32) < mpmath.mpf(10) ** -60


def test_r_single_conventions():
    cfg = EvalConfig(digits=30, tol=1e-20)
    with mpmath.workdps(40):
        assert abs(r_single(1, cfg) - 2 * mpmath.log(2)) < 1e-35
        assert abs(r_single(2, cfg) - mpmath.pi**2 / 2) < 1e-35
        assert abs(r_single(3, cfg) - 7 * mpmath.zeta(3)) < 1e-35
        # R(k-bar) = 2^k sum (-1)^n/(2n-1)^k = -2^k beta(k)
        assert abs(r_single(-1, cfg) + mpmath.pi / 2) < 1e-35
        assert abs(r_single(-2, cfg) + 4 * mpmath.catalan) < 1e-35


def test_zeta_conventions():
    assert zeta_conv(0) == mpmath.mpf(-1) / 2
    assert zeta_conv(1) == 0
    with mpmath.workdps(50):
        assert abs(zeta_conv(-1) + mpmath.log(2)) < 1e-45


@pytest.mark.parametrize("fn,arg", [(zeta_int, 1), (eta_int, 0), (r_single, 0), (beta_dirichlet, 0), (even_zeta_rational, 3)])
def test_domain_errors(fn, arg):
    with pytest.raises(DomainError):
        fn(arg)


@pytest.mark.parametrize(
    "kwargs",
    [{"digits": 3}, {"checkpoints": 1}, {"max_terms": 10, "checkpoints": 8}, {"tol": 0.0}, {"digits": 20, "tol": 1e-30}, {"accel": "magic"}],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        EvalConfig(**kwargs)


def test_env_override(monkeypatch):
    monkeypatch.setenv("EULERIUM_DIGITS", "25")
    assert EvalConfig.from_env().digits == 25
    assert EvalConfig.from_env(digits=50).digits == 50
    monkeypatch.delenv("EULERIUM_DIGITS")
    assert EvalConfig.from_env().digits == DEFAULT.digits == 40


def test_global_precision_untouched():
    before = mpmath.mp.dps
    zeta_int(5, CFG60)
    assert mpmath.mp.dps == before


def test_rounded_keeps_trailing_zeros():
    assert rounded(mpmath.mpf("0.5"), 4) == "0.5000"
