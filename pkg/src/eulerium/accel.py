"""Convergence acceleration for slowly convergent single-index series.

A *kernel* is a generator function ``kernel(bits, stops)`` that sums a series
in binary fixed point (integers scaled by ``2**bits``).  It pulls increasing
truncation points from the ``stops`` iterator and, each time it reaches one,
yields ``(partial_sum, last_term)``.  Kernels never see the extrapolation; the
engine decides how many checkpoints to request.

Partial sums ``S(N)`` of the series handled here have asymptotic expansions

    S(N) ~ S + sum_{j>=1} sum_{l=0}^{L} c_{jl} N^{-j} log(N)^l

whenever ``N`` is restricted to a fixed residue class (alternating signs and
periodic coefficients then contribute smooth terms only).  ``L`` is the
number of weight-one harmonic-type factors, supplied by the caller.  Checkpoints
are ``N0 * 2**i`` with ``N0`` a multiple of the period, and ``S`` is obtained
from the least-order linear fit through all recorded checkpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

import mpmath
from mpmath import mpf

from .hparith import DEFAULT, EvalConfig

Kernel = Callable[[int, Iterator[int]], Iterator[tuple[int, int]]]

BASE_CHECKPOINT = 64


class ConvergenceError(ArithmeticError):
    """Raised when a series does not reach ``cfg.tol`` within ``cfg.max_terms``."""

    def __init__(self, message: str, result: "SeriesResult"):
        super().__init__(message)
        self.result = result


@dataclass(frozen=True)
class SeriesResult:
    value: mpf
    terms_used: int
    err_estimate: mpf
    method: str
    history: tuple = field(default=(), repr=False, compare=False)

    def __float__(self):
        return float(self.value)


def fixed_to_mpf(x: int, bits: int) -> mpf:
    return mpmath.ldexp(mpf(x), -bits)


def mpf_to_fixed(x, bits: int) -> int:
    return int(mpmath.nint(mpmath.ldexp(mpf(x), bits)))


def _basis(count: int, log_power: int) -> list[tuple[int, int]]:
    out = []
    j = 1
    while len(out) < count:
        for l in range(log_power, -1, -1):
            if len(out) < count:
                out.append((j, l))
        j += 1
    return out


@lru_cache(maxsize=512)
def _weights(ns: tuple[int, ...], log_power: int, dps: int) -> tuple[mpf, ...]:
    """Weights w with sum(w_i S(N_i)) = the fitted limit."""
    m = len(ns)
    with mpmath.workdps(dps):
        a = mpmath.matrix(m, m)
        for i, n in enumerate(ns):
            a[i, 0] = 1
            lg = mpmath.log(n)
            for c, (j, l) in enumerate(_basis(m - 1, log_power)):
                a[i, c + 1] = mpf(n) ** (-j) * lg**l
        e0 = mpmath.matrix(m, 1)
        e0[0] = 1
        w = mpmath.lu_solve(a.T, e0)
        return tuple(w[i] for i in range(m))


def stride_for(period: int) -> int:
    return 2 * period // math.gcd(2, period)


def _geometric(n0: int) -> Iterator[int]:
    n = n0
    while True:
        yield n
        n *= 2


def tail_integral_bound(last: mpf, n: int, decay: float, log_power: int) -> mpf:
    """Integral comparison tail for terms ~ C log(n)^L / n^s, scaled from the last term."""
    if decay <= 1:
        return mpf("inf")
    s1 = mpf(decay) - 1
    lg = mpmath.log(n)
    corr = sum(
        mpf(math.factorial(log_power)) / math.factorial(log_power - i) / (s1 * lg) ** i
        for i in range(log_power + 1)
    )
    return abs(last) * n / s1 * corr


def sum_series(
    kernel: Kernel,
    cfg: EvalConfig = DEFAULT,
    *,
    log_power: int = 0,
    decay: float = 2.0,
    alternating: bool = False,
    period: int = 1,
    label: str = "series",
) -> SeriesResult:
    """Evaluate the series produced by ``kernel`` to ``cfg.tol``.

    ``decay`` (the exponent s in |term| ~ n^-s) and ``alternating`` only matter
    for the direct mode's tail bound.
    """
    bits = cfg.bits
    stride = stride_for(period)
    n0 = -(-BASE_CHECKPOINT // stride) * stride
    if cfg.accel == "direct+tail-bound":
        return _direct(kernel, cfg, bits, stride, log_power, decay, alternating, label)

    dps = cfg.work_dps + 25
    stops = _geometric(n0)
    ns: list[int] = []
    sums: list[mpf] = []
    history = []
    prev = None
    err = mpf("inf")
    tol = mpf(cfg.tol)
    with mpmath.workdps(cfg.work_dps + 25):
        for partial, _last in kernel(bits, stops):
            ns.append(n0 * 2 ** len(ns))
            sums.append(fixed_to_mpf(partial, bits))
            if len(ns) < 3:
                continue
            w = _weights(tuple(ns), log_power, dps)
            est = mpmath.fsum(wi * si for wi, si in zip(w, sums))
            roundoff = mpmath.fsum(abs(wi) for wi in w) * ns[-1] * mpmath.ldexp(1, -bits)
            if prev is not None:
                err = abs(est - prev) + roundoff
            history.append((ns[-1], est, err))
            prev = est
            if len(ns) >= cfg.checkpoints and err <= tol / 4:
                break
            if 2 * ns[-1] > cfg.max_terms:
                break
        with mpmath.workdps(cfg.work_dps):
            res = SeriesResult(+prev, ns[-1], +err, "extrapolated", tuple(history))
    if not err <= tol:
        raise ConvergenceError(
            f"{label}: error estimate {mpmath.nstr(err, 3)} > tol {cfg.tol} after {ns[-1]} terms",
            res,
        )
    return res


def _direct(kernel, cfg, bits, stride, log_power, decay, alternating, label):
    n = max(stride, cfg.max_terms // stride * stride)
    gen = kernel(bits, iter([n]))
    partial, last = next(gen)
    gen.close()
    with mpmath.workdps(cfg.work_dps):
        value = fixed_to_mpf(partial, bits)
        last = fixed_to_mpf(last, bits)
        if alternating:
            bound = abs(last)
        else:
            bound = tail_integral_bound(last, n, decay, log_power)
        bound += n * mpmath.ldexp(1, -bits)
        res = SeriesResult(value, n, bound, "direct+bound", ((n, value, bound),))
    if not bound <= cfg.tol:
        raise ConvergenceError(
            f"{label}: tail bound {mpmath.nstr(bound, 3)} > tol {cfg.tol} after {n} terms", res
        )
    return res
