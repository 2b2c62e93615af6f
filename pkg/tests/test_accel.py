import mpmath
import pytest

from eulerium.accel import (
    ConvergenceError,
    fixed_to_mpf,
    mpf_to_fixed,
    stride_for,
    sum_series,
    tail_integral_bound,
)
from eulerium.hparith import EvalConfig


def power_kernel(s, log=False, alternating=False):
    """Kernel for sum_{n>=1} (+-1)^(n-1) log(n)^[log] / n^s in fixed point."""

    def run(bits, stops):
        total, n = 0, 1
        stop = next(stops)
        with mpmath.workdps(int(bits / 3.3) + 10):
            while True:
                t = mpmath.mpf(1) / mpmath.mpf(n) ** s
                if log:
                    t *= mpmath.log(n)
                if alternating and n % 2 == 0:
                    t = -t
                term = mpf_to_fixed(t, bits)
                total += term
                if n == stop:
                    yield total, term
                    stop = next(stops)
                n += 1

    return run


CFG = EvalConfig(digits=25, tol=1e-16)


def test_extrapolated_zeta2():
    res = sum_series(power_kernel(2), CFG)
    with mpmath.workdps(40):
        assert abs(res.value - mpmath.pi**2 / 6) < 1e-18
    assert res.method == "extrapolated"
    assert res.err_estimate <= CFG.tol
    assert res.terms_used <= 64 * 2**10


def test_extrapolated_log_weighted():
    # sum log(n)/n^2 = -zeta'(2)
    res = sum_series(power_kernel(2, log=True), CFG, log_power=1)
    with mpmath.workdps(40):
        assert abs(res.value + mpmath.zeta(2, derivative=1)) < 1e-14


def test_direct_alternating():
    cfg = EvalConfig(digits=20, tol=1e-8, accel="direct+tail-bound", max_terms=2 * 10**5)
    res = sum_series(power_kernel(2, alternating=True), cfg, alternating=True)
    with mpmath.workdps(30):
            assert abs(res.value - mpmath.pi**2 / 12) <= res.err_estimate
    assert res.method == "direct+bound"


def test_direct_tail_bound_is_honest():
    cfg = EvalConfig(digits=20, tol=1e-5, accel="direct+tail-bound", max_terms=2 * 10**5)
    res = sum_series(power_kernel(3), cfg, decay=3)
    with mpmath.workdps(30):
        assert abs(res.value - mpmath.zeta(3)) <= res.err_estimate


def test_convergence_error_carries_result():
    cfg = EvalConfig(digits=20, tol=1e-14, max_terms=300)
    with pytest.raises(ConvergenceError) as exc:
        sum_series(power_kernel(2, log=True), cfg)  # declared log_power 0 on purpose
    assert exc.value.result.terms_used <= 300


def test_divergent_tail_bound_is_inf():
    assert tail_integral_bound(mpmath.mpf(1), 10, 1.0, 0) == mpmath.inf


@pytest.mark.parametrize("period,stride", [(1, 2), (2, 2), (3, 6), (4, 4), (6, 6)])
def test_stride(period, stride):
    assert stride_for(period) == stride


@pytest.mark.parametrize("x", ["0.5", "-3.25", "1e-10"])
def test_fixed_roundtrip(x):
    with mpmath.workdps(40):
        v = mpmath.mpf(x)
        assert abs(fixed_to_mpf(mpf_to_fixed(v, 120), 120) - v) < mpmath.mpf(2) ** -119
