"""High-precision constants: pi, zeta/eta/beta at integer arguments, single R-values.

All real numbers are :class:`mpmath.mpf` values (aliased as ``BigReal``).  Every
public function takes an :class:`EvalConfig` and evaluates under a local
``mpmath.workdps`` context, so the global mpmath precision is never touched.

Odd and even ``zeta(n)``, ``eta(n)`` and ``beta(n)`` come from the alternating
series accelerator of Cohen, Rodriguez Villegas and Zagier; even zeta values are
additionally available in closed form from exactly computed Bernoulli numbers.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import mpmath
from mpmath import mpf

BigReal = mpf

# extra decimal digits carried internally beyond cfg.digits
GUARD_DIGITS = 10

ACCEL_MODES = ("extrapolated", "direct+tail-bound")


class DomainError(ValueError):
    """Argument outside the domain of a function (e.g. zeta(1), R(0))."""


@dataclass(frozen=True)
class EvalConfig:
    """Evaluation settings shared by every numeric routine.

    ``checkpoints`` is the minimum number of geometric partial-sum checkpoints
    the extrapolating engine records before it may declare convergence; it keeps
    doubling the truncation point until ``tol`` is met or ``max_terms`` would be
    exceeded.
    """

    digits: int = 40
    max_terms: int = 10**6
    checkpoints: int = 8
    tol: float = 1e-10
    accel: str = "extrapolated"

    def __post_init__(self):
        if self.digits < 6:
            raise ValueError(f"digits must be >= 6, got {self.digits}")
        if self.checkpoints < 2:
            raise ValueError("checkpoints must be >= 2")
        if self.max_terms < 2**self.checkpoints:
            raise ValueError(
                f"max_terms={self.max_terms} must be >= 2**checkpoints={2**self.checkpoints}"
            )
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        # working precision must dominate the target accuracy
        if math.log10(self.tol) < 5 - self.digits - 1e-9:
            raise ValueError(f"tol={self.tol} is below 10^(5-digits) for digits={self.digits}")
        if self.accel not in ACCEL_MODES:
            raise ValueError(f"accel must be one of {ACCEL_MODES}, got {self.accel!r}")

    @property
    def bits(self) -> int:
        """Binary working precision including guard bits."""
        return int(math.ceil((self.digits + GUARD_DIGITS) * math.log2(10)))

    @property
    def work_dps(self) -> int:
        return self.digits + GUARD_DIGITS

    def with_(self, **changes) -> "EvalConfig":
        return replace(self, **changes)

    @classmethod
    def from_env(cls, **overrides) -> "EvalConfig":
        """Default config, with ``EULERIUM_DIGITS`` overriding the precision."""
        env = os.environ.get("EULERIUM_DIGITS")
        if env and "digits" not in overrides:
            overrides["digits"] = int(env)
        return cls(**overrides)


DEFAULT = EvalConfig()


def rounded(x: mpf, digits: int) -> str:
    """Decimal string of ``x`` to ``digits`` significant digits."""
    return mpmath.nstr(x, digits, strip_zeros=False)


# ---------------------------------------------------------------------------
# Bernoulli numbers and even zeta closed forms (exact)


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    # Akiyama-Tanigawa gives B_1 = +1/2; sign of B_1 is irrelevant for even zeta
    out = []
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return tuple(out)


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (convention B_1 = -1/2)."""
    if n < 0:
        raise DomainError("bernoulli index must be >= 0")
    if n == 1:
        return Fraction(-1, 2)
    return _bernoulli_table(n)[n]


def even_zeta_rational(n: int) -> Fraction:
    """The rational c with zeta(n) = c * pi**n, for even n >= 2."""
    if n < 2 or n % 2:
        raise DomainError(f"even_zeta_rational needs even n >= 2, got {n}")
    k = n // 2
    c = Fraction((-1) ** (k + 1)) * bernoulli(n) * Fraction(2**n, 2 * math.factorial(n))
    return c


# ---------------------------------------------------------------------------
# Alternating-series accelerator


def _cvz_sum(term: Callable[[int], mpf], dps: int) -> mpf:
    """Sum_{k>=0} (-1)^k term(k) for a totally monotone term sequence.

    Cohen-Villegas-Zagier Algorithm 1; error about 5.83**-n relative.
    """
    n = int(1.32 * dps) + 8
    d = (3 + mpmath.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = mpf(-1)
    c = -d
    s = mpf(0)
    for k in range(n):
        c = b - c
        s += c * term(k)
        b = b * (k + n) * (k - n) / ((k + mpf(1) / 2) * (k + 1))
    return s / d


@lru_cache(maxsize=4096)
def _pi(dps: int) -> mpf:
    with mpmath.workdps(dps):
        return +mpmath.pi


@lru_cache(maxsize=4096)
def _log2(dps: int) -> mpf:
    with mpmath.workdps(dps):
        return mpmath.log(2)


@lru_cache(maxsize=4096)
def _eta(n: int, dps: int) -> mpf:
    with mpmath.workdps(dps + 5):
        return _cvz_sum(lambda k: mpf(k + 1) ** (-n), dps + 5)


@lru_cache(maxsize=4096)
def _beta(n: int, dps: int) -> mpf:
    with mpmath.workdps(dps + 5):
        return _cvz_sum(lambda k: mpf(2 * k + 1) ** (-n), dps + 5)


def const_pi(cfg: EvalConfig = DEFAULT) -> mpf:
    """pi to the working precision of ``cfg``."""
    return _pi(cfg.work_dps)


def const_log2(cfg: EvalConfig = DEFAULT) -> mpf:
    return _log2(cfg.work_dps)


def eta_int(n: int, cfg: EvalConfig = DEFAULT) -> mpf:
    """Dirichlet eta: sum (-1)^(k-1)/k^n, with eta(1) = log 2."""
    if n < 1:
        raise DomainError(f"eta_int needs n >= 1, got {n}")
    if n == 1:
        return const_log2(cfg)
    return _eta(n, cfg.work_dps)


def zeta_int(n: int, cfg: EvalConfig = DEFAULT) -> mpf:
    """Riemann zeta(n) for integer n >= 2, via eta(n) / (1 - 2^(1-n))."""
    if n < 2:
        raise DomainError(f"zeta_int needs n >= 2, got {n}")
    with mpmath.workdps(cfg.work_dps):
        return eta_int(n, cfg) / (1 - mpf(2) ** (1 - n))


def zeta_even_closed(n: int, cfg: EvalConfig = DEFAULT) -> mpf:
    """zeta(n) for even n from the Bernoulli closed form."""
    c = even_zeta_rational(n)
    with mpmath.workdps(cfg.work_dps):
        return mpf(c.numerator) / c.denominator * const_pi(cfg) ** n


def beta_dirichlet(n: int, cfg: EvalConfig = DEFAULT) -> mpf:
    """Dirichlet beta: sum_{k>=0} (-1)^k/(2k+1)^n, with beta(1) = pi/4."""
    if n < 1:
        raise DomainError(f"beta_dirichlet needs n >= 1, got {n}")
    return _beta(n, cfg.work_dps)


def r_single(k: int, cfg: EvalConfig = DEFAULT) -> mpf:
    """Depth-one R-value.

    R(k) = (2^k - 1) zeta(k) for k >= 2, R(1) = 2 log 2 by convention, and for
    barred arguments R(-k) = 2^k sum_{n>=1} (-1)^n/(2n-1)^k = -2^k beta(k).
    """
    if k == 0:
        raise DomainError("R(0) is undefined")
    with mpmath.workdps(cfg.work_dps):
        if k == 1:
            return 2 * const_log2(cfg)
        if k > 0:
            return (mpf(2) ** k - 1) * zeta_int(k, cfg)
        m = -k
        return -(mpf(2) ** m) * beta_dirichlet(m, cfg)


def zeta_conv(n: int, cfg: EvalConfig = DEFAULT) -> mpf:
    """zeta(n) with the conventions zeta(0) = -1/2, zeta(1) = 0; negative n means zeta(n-bar) = -eta(|n|)."""
    with mpmath.workdps(cfg.work_dps):
        if n == 0:
            return mpf(-1) / 2
        if n == 1:
            return mpf(0)
        if n > 0:
            return zeta_int(n, cfg)
        return -eta_int(-n, cfg)
