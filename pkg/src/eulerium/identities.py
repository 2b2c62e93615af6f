"""Closed forms and residual-zero checkers for R-sum identities.

Residual checkers evaluate both sides of an identity independently.  Every
series that appears is of the form

    sum_{n>=1} c * (product of functionals of A, B, C at n or n-1)
               * (product of sequence terms) / (n - 1/2)^e

and is summed by :func:`functional_series`, which advances one
:class:`~eulerium.sequences.FunctionalStream` per sequence in fixed point.
"""

from __future__ import annotations

import itertools
import json
import math
import time
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

import mpmath
from mpmath import mpf

from .accel import SeriesResult, sum_series
from .hparith import DEFAULT, DomainError, EvalConfig
from .parser import parse_spec
from .sequences import A1, A2, FunctionalStream, Rhat_A, R_A, Seq
from .sums import MRVIndex, SumSpec, euler_sum, mrv
from .symbolic import (
    LOG2,
    PI,
    ZERO,
    DZeta,
    R,
    SymExpr,
    Ttilde2,
    Zeta,
    ZetaBar,
    eval_sym,
    parse_sym,
    ttilde2,
)

binom = math.comb

# ---------------------------------------------------------------------------
# linear R-sums

VARIANTS = ("plain", "barp", "barp_barq", "plainp_barq")
_VARIANT_SIGNS = {"plain": (1, 1), "barp": (-1, 1), "barp_barq": (-1, -1), "plainp_barq": (1, -1)}


def variant_spec(p: int, q: int, variant: str) -> SumSpec:
    """The R-sum solved for by :func:`linear_rsum_closed`."""
    sp, sq = _VARIANT_SIGNS[variant]
    return SumSpec.rsum([sp * p], sq * q)


def linear_rsum_closed(p: int, q: int, variant: str = "plain") -> tuple[int, SymExpr]:
    """(coef, rhs) with coef * R-sum = rhs for the four sign variants.

    coef is 0 or 2.  When it is 0 the rhs is a relation among constants and
    evaluates to zero.  Conventions: zeta(0) = zeta(0-bar) = -1/2, zeta(1) = 0,
    R(1) = 2 log 2.
    """
    if p < 1 or q < 2:
        raise DomainError(f"need p >= 1 and q >= 2, got p={p}, q={q}")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    s = (-1) ** p
    e = ZERO
    if variant == "plain":
        coef = 1 - (-1) ** (p + q)
        for j in range(p + 1):
            e += s * (1 + (-1) ** j) * binom(p + q - j - 1, q - 1) * Zeta(j) * R(p + q - j)
        for k in range(q):
            e += s * (1 - (-1) ** k) * binom(p + q - k - 2, p - 1) * R(k + 1) * R(p + q - k - 1)
        e -= s * (1 + (-1) ** q) * Zeta(p) * R(q)
    elif variant == "barp":
        coef = 1 - (-1) ** (p + q)
        for j in range(p + 1):
            e -= s * (1 + (-1) ** j) * binom(p + q - j - 1, q - 1) * ZetaBar(j) * R(p + q - j)
        for k in range(q):
            e -= s * (1 + (-1) ** k) * binom(p + q - k - 2, p - 1) * R(-(k + 1)) * R(-(p + q - k - 1))
        e += s * (1 + (-1) ** q) * ZetaBar(p) * R(q)
    elif variant == "barp_barq":
        coef = 1 + (-1) ** (p + q)
        for j in range(p + 1):
            e += s * (1 + (-1) ** j) * binom(p + q - j - 1, q - 1) * Zeta(j) * R(-(p + q - j))
        for k in range(q):
            e += s * (1 - (-1) ** k) * binom(p + q - k - 2, p - 1) * R(k + 1) * R(-(p + q - k - 1))
        e -= s * (1 - (-1) ** q) * ZetaBar(p) * R(-q)
    else:
        coef = 1 + (-1) ** (p + q)
        for j in range(p + 1):
            e -= s * (1 + (-1) ** j) * binom(p + q - j - 1, q - 1) * ZetaBar(j) * R(-(p + q - j))
        for k in range(q):
            e -= s * (1 + (-1) ** k) * binom(p + q - k - 2, p - 1) * R(-(k + 1)) * R(p + q - k - 1)
        # the last term carries R(q-bar); with R(q) the identity fails for odd q, p >= 2
        e += s * (1 - (-1) ** q) * Zeta(p) * R(-q)
    return coef, e


# ---------------------------------------------------------------------------
# check results


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of evaluating both sides of one identity."""

    name: str
    lhs: mpf
    rhs: mpf
    abs_err: mpf
    tol: float
    terms_used: int
    runtime_ms: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return bool(self.abs_err < self.tol)


def _check(name, lhs, rhs, tol, terms, t0) -> IdentityCheck:
    return IdentityCheck(name, lhs, rhs, abs(lhs - rhs), tol, terms, (time.perf_counter() - t0) * 1e3)


# ---------------------------------------------------------------------------
# functional series


@dataclass(frozen=True)
class Summand:
    """c * prod funcs * prod seqs / (n-1/2)^power, summed over n >= 1.

    ``funcs`` holds (seq, kind, j, lag) and ``seqs`` holds (seq, lag); the
    index is n - lag with lag in {0, 1}.
    """

    coef: Fraction
    power: int
    funcs: tuple = ()
    seqs: tuple = ()


_LOG_KINDS = {"E", "Ebar", "M", "Mbar"}


def functional_series(summands: Sequence[Summand], cfg: EvalConfig = DEFAULT, label: str = "series") -> SeriesResult:
    """Sum a list of :class:`Summand` as one series."""
    summands = [s for s in summands if s.coef]
    if not summands:
        return SeriesResult(mpf(0), 0, mpf(0), "empty")
    orders: dict[Seq, set[int]] = defaultdict(set)
    period = 1
    for s in summands:
        for seq, _kind, j, _lag in s.funcs:
            orders[seq].add(j)
        for seq, _lag in s.seqs:
            orders[seq]
    for seq in orders:
        period = period * seq.period // math.gcd(period, seq.period)
    log_power = max(sum(1 for _s, kind, j, _l in s.funcs if j == 1 and kind in _LOG_KINDS) for s in summands)
    dens = [s.coef.denominator for s in summands]
    den = math.lcm(*dens)
    nums = [s.coef.numerator * (den // s.coef.denominator) for s in summands]

    def kernel(bits, stops):
        streams = {seq: FunctionalStream(seq, sorted(js) or [2], cfg, bits) for seq, js in orders.items()}
        for st in streams.values():
            st.step(0)
        total = 0
        stop = next(stops)
        n = 1
        while True:
            for st in streams.values():
                st.step(n)
            two_n1 = 2 * n - 1
            term = 0
            for s, c in zip(summands, nums):
                v = c << bits
                for seq, kind, j, lag in s.funcs:
                    st = streams[seq]
                    v = (v * (st.get(kind, j) if lag == 0 else st.get_prev(kind, j))) >> bits
                for seq, lag in s.seqs:
                    v = (v * streams[seq].a_fixed(n - lag)) >> bits
                term += (v << s.power) // two_n1**s.power
            term //= den
            total += term
            if n == stop:
                yield total, term
                stop = next(stops)
            n += 1

    decay = min(s.power for s in summands)
    return sum_series(kernel, cfg, log_power=log_power, decay=decay, period=period, label=label)


def _seqs_ok(*seqs: Seq):
    for s in seqs:
        if s.period is None:
            raise DomainError(f"sequence {s} must be periodic for the residue checkers")


def theorem31_check(p: int, q: int, A: Seq, B: Seq, cfg: EvalConfig = DEFAULT) -> IdentityCheck:
    """Both sides of the cot(pi s; A) * Psi^(p-1)(-s; B) residue identity."""
    if p < 1 or q < 2:
        raise DomainError(f"need p >= 1 and q >= 2, got p={p}, q={q}")
    _seqs_ok(A, B)
    t0 = time.perf_counter()
    sp = (-1) ** p
    lhs_s = [
        Summand(Fraction((-1) ** (p + q)), q, ((B, "Mbar", p, 0),), ((A, 0),)),
        Summand(Fraction(1), q, ((B, "M", p, 1),), ((A, 1),)),
    ]
    rhs_s = [
        Summand(Fraction(sp * binom(p + q - j - 1, q - 1)), p + q - j, ((A, "T", j, 1),), ((B, 1),))
        for j in range(1, p + 1)
    ]
    lhs = functional_series(lhs_s, cfg, f"thm31 lhs p={p} q={q}")
    rhs = functional_series(rhs_s, cfg, f"thm31 rhs p={p} q={q}")
    with mpmath.workdps(cfg.work_dps):
        const = mpf(0)
        for k in range(q):
            const -= sp * binom(p + q - k - 2, p - 1) * (
                (-1) ** k * R_A(A, k + 1, cfg) - Rhat_A(A, k + 1, cfg)
            ) * Rhat_A(B, p + q - k - 1, cfg)
        const -= sp * binom(p + q - 1, p) * Rhat_A(A * B, p + q, cfg)
        return _check(f"thm31(p={p},q={q},{A},{B})", lhs.value, rhs.value + const, 10 * cfg.tol,
                      max(lhs.terms_used, rhs.terms_used), t0)


def theorem31_residual(p: int, q: int, A: Seq, B: Seq, cfg: EvalConfig = DEFAULT) -> mpf:
    return theorem31_check(p, q, A, B, cfg).abs_err


def _compositions2(total: int):
    return [(i, total - i) for i in range(total + 1)]


def theorem33_check(m: int, p: int, q: int, A: Seq, B: Seq, cfg: EvalConfig = DEFAULT) -> IdentityCheck:
    """Both sides of the Psi^(m-1)(-s; A) * Psi^(p-1)(-s; B) duality identity.

    The first series runs over M^(B)_{n-1}(p+i) a_{n-1}, the index shift that
    the residues at the non-negative integers produce.
    """
    if m < 1 or p < 1 or q < 2:
        raise DomainError(f"need m, p >= 1 and q >= 2, got m={m}, p={p}, q={q}")
    _seqs_ok(A, B)
    t0 = time.perf_counter()
    lhs_s = []
    for i, j in _compositions2(m - 1):
        c = (-1) ** m * binom(p + i - 1, i) * binom(q + j - 1, j)
        lhs_s.append(Summand(Fraction(c), q + j, ((B, "M", p + i, 1),), ((A, 1),)))
    for i, j in _compositions2(p - 1):
        c = (-1) ** p * binom(m + i - 1, i) * binom(q + j - 1, j)
        lhs_s.append(Summand(Fraction(c), q + j, ((A, "M", m + i, 1),), ((B, 1),)))
    lhs = functional_series(lhs_s, cfg, f"thm33 lhs m={m} p={p} q={q}")
    with mpmath.workdps(cfg.work_dps):
        rhs = (-1) ** (p + m - 1) * binom(p + q + m - 2, q - 1) * Rhat_A(A * B, p + q + m - 1, cfg)
        for i, j in _compositions2(q - 1):
            rhs += (-1) ** (p + m) * binom(m + i - 1, i) * binom(p + j - 1, j) * Rhat_A(A, m + i, cfg) * Rhat_A(B, p + j, cfg)
        return _check(f"thm33(m={m},p={p},q={q},{A},{B})", lhs.value, rhs, 10 * cfg.tol, lhs.terms_used, t0)


def theorem33_residual(m: int, p: int, q: int, A: Seq, B: Seq, cfg: EvalConfig = DEFAULT) -> mpf:
    return theorem33_check(m, p, q, A, B, cfg).abs_err


def duality_corollary_check(cfg: EvalConfig = DEFAULT) -> IdentityCheck:
    """3 R_{2,4} + 2 R_{3,3} = 112 zeta(3)^2 - pi^6/6."""
    t0 = time.perf_counter()
    a = euler_sum(SumSpec.rsum([2], 4), cfg)
    b = euler_sum(SumSpec.rsum([3], 3), cfg)
    rhs = 112 * Zeta(3) ** 2 - Fraction(1, 6) * PI**6
    with mpmath.workdps(cfg.work_dps):
        return _check("3R_{2,4}+2R_{3,3}", 3 * a.value + 2 * b.value, eval_sym(rhs, cfg), 1e-8,
                      max(a.terms_used, b.terms_used), t0)


THM34_TOL = 1e-6


def theorem34_check(m: int, p: int, q: int, A: Seq, B: Seq, C: Seq, cfg: EvalConfig = DEFAULT) -> IdentityCheck:
    """Left side of the quadratic identity split as (products of M-bar, M) vs. the rest.

    The identity states the full left side is zero; ``lhs`` holds the first two
    series and ``rhs`` minus everything else.
    """
    if m < 1 or p < 1 or q < 2:
        raise DomainError(f"need m, p >= 1 and q >= 2, got m={m}, p={p}, q={q}")
    _seqs_ok(A, B, C)
    t0 = time.perf_counter()
    head = [
        Summand(Fraction((-1) ** (p + q + m)), q, ((B, "Mbar", m, 0), (C, "Mbar", p, 0)), ((A, 0),)),
        Summand(Fraction(1), q, ((B, "M", m, 1), (C, "M", p, 1)), ((A, 1),)),
    ]
    rest = []
    for j in range(1, m + 2):
        c = (-1) ** m * binom(j + p - 2, p - 1) * binom(m + q - j, q - 1)
        rest.append(Summand(Fraction(c), m + q - j + 1, ((C, "M", j + p - 1, 1),), ((A, 1), (B, 1))))
    for j in range(1, p + 2):
        c = (-1) ** p * binom(j + m - 2, m - 1) * binom(p + q - j, q - 1)
        rest.append(Summand(Fraction(c), p + q - j + 1, ((B, "M", j + m - 1, 1),), ((A, 1), (C, 1))))
    for j in range(1, p + m + 1):
        c = -((-1) ** (p + m)) * binom(p + q + m - j - 1, q - 1)
        rest.append(Summand(Fraction(c), p + q + m - j, ((A, "T", j, 1),), ((B, 1), (C, 1))))
    for j1 in range(1, m + 1):
        for j2 in range(1, m + 2 - j1):
            c = -((-1) ** m) * binom(m + q - j1 - j2, q - 1) * binom(j2 + p - 2, p - 1)
            rest.append(Summand(Fraction(c), m + q - j1 - j2 + 1, ((A, "T", j1, 1), (C, "M", j2 + p - 1, 1)), ((B, 1),)))
    for j1 in range(1, p + 1):
        for j2 in range(1, p + 2 - j1):
            c = -((-1) ** p) * binom(p + q - j1 - j2, q - 1) * binom(j2 + m - 2, m - 1)
            rest.append(Summand(Fraction(c), p + q - j1 - j2 + 1, ((A, "T", j1, 1), (B, "M", j2 + m - 1, 1)), ((C, 1),)))
    lhs = functional_series(head, cfg, f"thm34 head m={m} p={p} q={q}")
    other = functional_series(rest, cfg, f"thm34 rest m={m} p={p} q={q}")
    with mpmath.workdps(cfg.work_dps):
        const = (-1) ** (p + m) * binom(p + q + m - 1, q - 1) * Rhat_A(A * B * C, p + q + m, cfg)
        const += theorem34_pole_residue(m, p, q, A, B, C, cfg)
        rhs = -(other.value + const)
        return _check(f"thm34(m={m},p={p},q={q},{A},{B},{C})", lhs.value, rhs, max(THM34_TOL, 10 * cfg.tol),
                      max(lhs.terms_used, other.terms_used), t0)


def theorem34_pole_residue(m: int, p: int, q: int, A: Seq, B: Seq, C: Seq, cfg: EvalConfig = DEFAULT) -> mpf:
    """Residue of the cot * Psi * Psi kernel at s = -1/2."""
    tot = mpf(0)
    with mpmath.workdps(cfg.work_dps):
        for k1 in range(q):
            for k2 in range(q - k1):
                k3 = q - 1 - k1 - k2
                tot += (
                    binom(m + k2 - 1, k2) * binom(p + k3 - 1, k3)
                    * ((-1) ** k1 * R_A(A, k1 + 1, cfg) - Rhat_A(A, k1 + 1, cfg))
                    * Rhat_A(B, m + k2, cfg) * Rhat_A(C, p + k3, cfg)
                )
        return (-1) ** (m + p) * tot


def theorem34_residual(m: int, p: int, q: int, A: Seq, B: Seq, C: Seq, cfg: EvalConfig = DEFAULT) -> mpf:
    return theorem34_check(m, p, q, A, B, C, cfg).abs_err


# ---------------------------------------------------------------------------
# depth-three reduction


def triple_reduction(m: int, p: int, q: int) -> SymExpr:
    """Closed form of sum_{n>=1} H_{n-1}^(m) h_n^(p) / n^q for p+q+m even.

    Expressed over zeta, log 2, double zeta zeta(a,b) and the normalized double
    values Tt(a,b) and tt(a,b); R(1) = 2 log 2 and zeta(1) = 0 throughout.  The
    half-integer residues produce h_n (not h_{n-1}), hence the non-strict
    :func:`ttilde2_star` there.
    """
    if m < 1 or p < 1 or q < 2:
        raise DomainError(f"need m, p >= 1 and q >= 2, got m={m}, p={p}, q={q}")
    if (p + q + m) % 2:
        raise DomainError("p+q+m must be even (otherwise the left side cancels)")
    z, sg = Zeta, lambda e: (-1) ** e
    e = -sg(m + p) * (1 + sg(q)) * z(m) * z(q) * R(p)
    e -= sg(m) * (1 - sg(p + q)) * z(m) * Ttilde2(q, p)
    e -= sg(p) * (1 - sg(q + m)) * R(p) * DZeta(q, m)
    e -= sg(p) * R(p) * z(q + m)
    e -= Ttilde2(m + q, p)
    for k in range(1, m + 2):
        w = m + q - k + 1
        e += sg(m + p) * sg(k) * binom(k + p - 2, p - 1) * binom(m + q - k, q - 1) * (
            R(k + p - 1) * z(w) + sg(k + p - 1) * Ttilde2(w, k + p - 1)
        )
    for k1 in range(1, (m + 1) // 2 + 1):
        for k2 in range(1, m + 2 - 2 * k1):
            w = m + q - 2 * k1 - k2 + 1
            e -= 2 * sg(m + p) * sg(2 * k1 + k2) * binom(k2 + p - 2, p - 1) * binom(m + q - 2 * k1 - k2, q - 1) * z(2 * k1) * (
                R(k2 + p - 1) * z(w) + sg(k2 + p - 1) * Ttilde2(w, k2 + p - 1)
            )
    for k1 in range(p):
        for k2 in range(p - k1):
            k3 = p - 1 - k1 - k2
            e += sg(m) * (1 - sg(k1)) * sg(k3) * binom(k2 + m - 1, k2) * binom(k3 + q - 1, k3) * R(k1 + 1) * (
                R(m + k2) * R(k3 + q) + sg(m + k2) * ttilde2_star(k3 + q, m + k2)
            )
    e -= triple_pole_residue(m, p, q)
    return e / 2


def ttilde2_star(a: int, b: int) -> SymExpr:
    """Non-strict sum_{n>=1} h_n^(b) / (n-1/2)^a = tt(a,b) + R(a+b)."""
    return ttilde2(a, b) + R(a + b)


def triple_pole_residue(m: int, p: int, q: int) -> SymExpr:
    """Residue at s = 0 of pi cot(pi s) psi^(m-1)(-s) psi^(p-1)(-s) / s^q (normalized)."""
    z, sg = Zeta, lambda e: (-1) ** e
    w = p + q + m
    e = sg(p) * binom(w - 1, p - 1) * R(w)
    for k in range(1, (m + q) // 2 + 1):
        e -= 2 * sg(p) * binom(w - 2 * k - 1, p - 1) * z(2 * k) * R(w - 2 * k)
    for k in range(1, q + 2):
        e += sg(m + p) * binom(k + m - 2, m - 1) * binom(p + q - k, p - 1) * z(k + m - 1) * R(p + q - k + 1)
    for k1 in range(1, (q + 1) // 2 + 1):
        for k2 in range(1, q + 2 - 2 * k1):
            e -= 2 * sg(m + p) * binom(k2 + m - 2, m - 1) * binom(p + q - 2 * k1 - k2, p - 1) * z(2 * k1) * z(k2 + m - 1) * R(
                p + q - 2 * k1 - k2 + 1
            )
    return e


def _triple_kernel(m: int, p: int, q: int):
    """sum_{n>=1} H_{n-1}^(m) h_n^(p) / n^q in fixed point."""

    def run(bits, stops):
        one = 1 << bits
        H = 0
        h = 0
        total = 0
        stop = next(stops)
        n = 1
        while True:
            h += (one << p) // (2 * n - 1) ** p
            term = (H * h >> bits) // n**q
            total += term
            if n == stop:
                yield total, term
                stop = next(stops)
            H += one // n**m
            n += 1

    return run


def triple_lhs(m: int, p: int, q: int, cfg: EvalConfig = DEFAULT) -> SeriesResult:
    log_power = (m == 1) + (p == 1)
    return sum_series(_triple_kernel(m, p, q), cfg, log_power=log_power, decay=q, label=f"triple({m},{p},{q})")


TRIPLE_TOL = 1e-6


def triple_check(m: int, p: int, q: int, cfg: EvalConfig = DEFAULT) -> IdentityCheck:
    t0 = time.perf_counter()
    lhs = triple_lhs(m, p, q, cfg)
    rhs = eval_sym(triple_reduction(m, p, q), cfg)
    return _check(f"triple(m={m},p={p},q={q})", lhs.value, rhs, TRIPLE_TOL, lhs.terms_used, t0)


def depth3_relation_check(k1: int, k2: int, k3: int, cfg: EvalConfig = DEFAULT) -> IdentityCheck:
    """R(k1) zeta(k2,k3) - R(k1,k2,k3) against the series over h_n^(k1) H_{n-1}^(k3)/n^k2."""
    if k1 < 2 or k2 < 2:
        raise DomainError("need k1, k2 > 1")
    t0 = time.perf_counter()
    lhs = triple_lhs(k3, k1, k2, cfg)
    with mpmath.workdps(cfg.work_dps):
        rhs = eval_sym(R(k1) * DZeta(k2, k3), cfg) - mrv((k1, k2, k3), cfg).value
    return _check(f"depth3({k1},{k2},{k3})", lhs.value, rhs, TRIPLE_TOL, lhs.terms_used, t0)


# ---------------------------------------------------------------------------
# quasi-shuffle


def compositions(m: int):
    """All compositions of m as tuples, in lexicographic order."""
    if m == 0:
        yield ()
        return
    for first in range(1, m + 1):
        for rest in compositions(m - first):
            yield (first,) + rest


def quasi_shuffle_expand(factors: Sequence[int], q: int) -> list[tuple[Fraction, MRVIndex]]:
    """Expand R_{i_1...i_m, q} into MRVs R(q, J_1, ..., J_p).

    Signed orders: a negative entry is barred.  A barred harmonic factor and a
    barred q each contribute a sign -1; merged blocks add absolute orders and
    multiply signs.
    """
    m = len(factors)
    if m < 1:
        raise DomainError("need at least one harmonic factor")
    if any(f == 0 for f in factors) or abs(q) < 2:
        raise DomainError("orders must be nonzero and |q| >= 2")
    sign = (-1) ** sum(1 for f in factors if f < 0) * (-1 if q < 0 else 1)
    acc: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
    for xi in compositions(m):
        weight = Fraction(sign, math.prod(math.factorial(x) for x in xi))
        for perm in itertools.permutations(factors):
            blocks, pos = [], 0
            for x in xi:
                blk = perm[pos : pos + x]
                pos += x
                mag = sum(abs(b) for b in blk)
                neg = sum(1 for b in blk if b < 0) % 2
                blocks.append(-mag if neg else mag)
            acc[(q,) + tuple(blocks)] += weight
    return sorted(((c, MRVIndex(k)) for k, c in acc.items() if c), key=lambda t: (len(t[1].ks), t[1].ks))


def quasi_shuffle_check(factors: Sequence[int], q: int, cfg: EvalConfig = DEFAULT, tol: float = 1e-6) -> IdentityCheck:
    t0 = time.perf_counter()
    lhs = euler_sum(SumSpec.rsum(factors, q), cfg)
    terms = lhs.terms_used
    with mpmath.workdps(cfg.work_dps):
        rhs = mpf(0)
        for c, idx in quasi_shuffle_expand(factors, q):
            r = mrv(idx, cfg)
            terms = max(terms, r.terms_used)
            rhs += mpf(c.numerator) / c.denominator * r.value
    label = ",".join(str(f) for f in factors)
    return _check(f"quasi-shuffle(R_{{{label};{q}}})", lhs.value, rhs, tol, terms, t0)


# ---------------------------------------------------------------------------
# explicit catalog


@dataclass(frozen=True)
class IdentityRecord:
    """lhs is a spec string (``R{~1;4}``, ``MRV(2,1)``); rhs an exact expression."""

    name: str
    lhs: str
    rhs: SymExpr
    provenance: str
    tol: float = 1e-8

    def lhs_spec(self) -> SumSpec | MRVIndex:
        return parse_spec(self.lhs)

    def to_json(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs.render(), "provenance": self.provenance, "tol": self.tol}

    @classmethod
    def from_json(cls, d: dict) -> "IdentityRecord":
        return cls(d["name"], d["lhs"], parse_sym(d["rhs"]), d["provenance"], float(d.get("tol", 1e-8)))


def example_catalog() -> list[IdentityRecord]:
    """The explicit alternating linear R-sums and height-one MRV evaluations."""
    z, F = Zeta, Fraction
    lin = "alternating linear R-sum evaluations"
    h1 = "height-one MRV evaluations"
    return [
        IdentityRecord("R_{~1,4}", "R{~1;4}", -62 * z(5) - F(1, 2) * PI * R(-4) - F(1, 4) * PI**3 * R(-2) + 15 * LOG2 * z(4), lin),
        IdentityRecord("R_{~2,3}", "R{~2;3}", 93 * z(5) + F(7, 2) * z(2) * z(3) + F(3, 2) * PI * R(-4) + F(1, 4) * PI**3 * R(-2), lin),
        IdentityRecord("R_{~1,~3}", "R{~1;~3}", F(3, 2) * R(-4) - 3 * z(2) * R(-2) + F(1, 4) * LOG2 * PI**3, lin),
        IdentityRecord("R_{~2,~2}", "R{~2;~2}", -F(3, 2) * R(-4) + 4 * z(2) * R(-2), lin),
        IdentityRecord("R_{1,~3}", "R{1;~3}", -F(3, 2) * R(-4) - F(7, 2) * PI * z(3) - F(1, 2) * LOG2 * PI**3, lin),
        IdentityRecord("R_{2,~2}", "R{2;~2}", F(3, 2) * R(-4) + F(1, 2) * z(2) * R(-2) + 7 * PI * z(3), lin),
        IdentityRecord("R(2,1)", "MRV(2,1)", 7 * z(3) - 6 * z(2) * LOG2, h1),
        IdentityRecord("R(3,1)", "MRV(3,1)", F(45, 4) * z(4) - 14 * LOG2 * z(3), h1),
        IdentityRecord("R(2,1,1)", "MRV(2,1,1)", F(15, 2) * z(4) + 6 * LOG2**2 * z(2) - 14 * LOG2 * z(3), h1),
        IdentityRecord(
            "R(3,1,1)", "MRV(3,1,1)", 62 * z(5) - F(45, 2) * LOG2 * z(4) - 28 * z(2) * z(3) + 14 * LOG2**2 * z(3), h1
        ),
        IdentityRecord(
            "R(2,1,1,1)",
            "MRV(2,1,1,1)",
            31 * z(5) - 15 * LOG2 * z(4) - 13 * z(2) * z(3) + 14 * LOG2**2 * z(3) - 4 * LOG2**3 * z(2),
            h1,
        ),
    ]


def eval_spec(spec: SumSpec | MRVIndex, cfg: EvalConfig = DEFAULT) -> SeriesResult:
    if isinstance(spec, MRVIndex):
        return mrv(spec, cfg)
    return euler_sum(spec, cfg)


def verify_record(rec: IdentityRecord, cfg: EvalConfig = DEFAULT) -> IdentityCheck:
    t0 = time.perf_counter()
    lhs = eval_spec(rec.lhs_spec(), cfg)
    with mpmath.workdps(cfg.work_dps):
        rhs = eval_sym(rec.rhs, cfg)
    return _check(rec.name, lhs.value, rhs, rec.tol, lhs.terms_used, t0)


def catalog_to_json(records: Iterable[IdentityRecord]) -> str:
    return json.dumps([r.to_json() for r in records], indent=2, ensure_ascii=True) + "\n"


def load_catalog(path: str | Path | None = None) -> list[IdentityRecord]:
    """Records from a JSON file (default: the bundled catalog)."""
    if path is None:
        path = Path(__file__).with_name("data") / "catalog.json"
    return [IdentityRecord.from_json(d) for d in json.loads(Path(path).read_text())]


def linear_check(p: int, q: int, variant: str, cfg: EvalConfig = DEFAULT, tol: float = 1e-8) -> IdentityCheck:
    """Solved form vs. the series when coef = 2; |rhs| when coef = 0."""
    t0 = time.perf_counter()
    coef, rhs = linear_rsum_closed(p, q, variant)
    with mpmath.workdps(cfg.work_dps):
        r = eval_sym(rhs, cfg)
        name = f"{variant}(p={p},q={q})"
        if coef == 0:
            return _check(name + " [relation]", mpf(0), r, tol, 0, t0)
        lhs = euler_sum(variant_spec(p, q, variant), cfg)
        return _check(name, lhs.value, r / coef, tol, lhs.terms_used, t0)


def bridge_check(p: int, q: int, variant: str, cfg: EvalConfig = DEFAULT, tol: float = 1e-8) -> IdentityCheck:
    """Depth-two MRV against the linear R-sum: R(q,p) = R_{p,q} and its three sign variants."""
    t0 = time.perf_counter()
    sp, sq = _VARIANT_SIGNS[variant]
    sign = sp * sq
    spec = SumSpec.rsum([sp * p], sq * q)
    a = mrv((sq * q, sp * p), cfg)
    b = euler_sum(spec, cfg)
    return _check(f"R({'~' if sq < 0 else ''}{q},{'~' if sp < 0 else ''}{p})", a.value, sign * b.value, tol,
                  max(a.terms_used, b.terms_used), t0)


__all__ = [
    "A1",
    "A2",
    "IdentityCheck",
    "IdentityRecord",
    "Summand",
    "VARIANTS",
    "bridge_check",
    "catalog_to_json",
    "compositions",
    "depth3_relation_check",
    "duality_corollary_check",
    "eval_spec",
    "example_catalog",
    "functional_series",
    "linear_check",
    "linear_rsum_closed",
    "load_catalog",
    "quasi_shuffle_check",
    "quasi_shuffle_expand",
    "theorem31_check",
    "theorem31_residual",
    "theorem33_check",
    "theorem33_residual",
    "theorem34_check",
    "theorem34_pole_residue",
    "theorem34_residual",
    "triple_check",
    "triple_lhs",
    "triple_pole_residue",
    "triple_reduction",
    "ttilde2_star",
    "variant_spec",
    "verify_record",
]
