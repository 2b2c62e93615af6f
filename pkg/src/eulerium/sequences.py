"""Sequence-parameterized digamma, cotangent and the functionals E, F, G, L, M, T, R.

A :class:`Seq` is a bilateral sequence ``a_k`` with ``a_k = o(|k|^alpha)``,
``alpha < 1``.  ``A1`` is the constant sequence 1 and ``A2`` is ``(-1)^k``.

Two evaluation routes exist for every infinite quantity:

* ``direct``: the defining series, summed by the acceleration engine (any seq);
* ``hurwitz``: for periodic sequences, the series is split into residue classes
  and each class is a Hurwitz zeta value or a digamma difference.

The periodic route also backs :class:`FunctionalStream`, which produces the
functionals at consecutive indices in fixed point for the theorem checkers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import mpmath
from mpmath import mpf

from .accel import SeriesResult, mpf_to_fixed, sum_series
from .hparith import DEFAULT, DomainError, EvalConfig, const_log2, r_single
from .sums import harmonic
from .symbolic import LOG2, Eta, SymExpr, Zeta


class PoleError(ZeroDivisionError):
    def __init__(self, where, message: str = ""):
        self.where = where
        super().__init__(message or f"pole at s = {where}")


class GrowthError(DomainError):
    pass


@dataclass(frozen=True, eq=False)
class Seq:
    """Bilateral sequence.  Periodic sequences carry their values over one period."""

    kind: str
    values: tuple[Fraction, ...] | None = None
    func: Callable[[int], object] | None = field(default=None, repr=False)
    alpha: float = 0.0
    name: str = ""

    def __post_init__(self):
        if self.kind not in ("A1", "A2", "Custom"):
            raise ValueError(f"kind must be A1, A2 or Custom, got {self.kind!r}")
        if self.values is None and self.func is None:
            raise ValueError("a sequence needs periodic values or a term function")
        if self.values is not None:
            object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if not self.alpha < 1:
            raise GrowthError(f"growth exponent alpha must be < 1, got {self.alpha}")
        if self.func is not None:
            _check_growth(self)

    @classmethod
    def periodic(cls, values: Sequence, name: str = "") -> "Seq":
        return cls("Custom", tuple(values), name=name or f"per{tuple(values)}")

    @classmethod
    def custom(cls, func: Callable[[int], object], alpha: float, name: str = "custom") -> "Seq":
        return cls("Custom", None, func, alpha, name)

    @property
    def period(self) -> int | None:
        return len(self.values) if self.values is not None else None

    def __call__(self, k: int):
        if self.values is not None:
            return self.values[k % len(self.values)]
        return self.func(k)

    def __mul__(self, other: "Seq") -> "Seq":
        if self.period and other.period:
            p = self.period * other.period // math.gcd(self.period, other.period)
            return Seq("Custom", tuple(self(k) * other(k) for k in range(p)), name=f"{self}*{other}")
        return Seq.custom(lambda k: self(k) * other(k), self.alpha + other.alpha, f"{self}*{other}")

    def __eq__(self, other):
        if not isinstance(other, Seq):
            return NotImplemented
        if self.values is not None and other.values is not None:
            return self.values == other.values
        return self is other

    def __hash__(self):
        return hash(self.values) if self.values is not None else id(self)

    def __str__(self):
        return self.name or self.kind


A1 = Seq("A1", (1,), name="A1")
A2 = Seq("A2", (1, -1), name="A2")


def _check_growth(seq: Seq) -> None:
    ks = [0] + [s * 2**i for i in range(0, 21) for s in (1, -1)]
    vals = {k: abs(complex(seq.func(k))) for k in ks}
    c = max(vals[k] / max(1, abs(k)) ** seq.alpha for k in ks if abs(k) <= 16) or 1.0
    for k in ks:
        if vals[k] > 10 * max(c, 1.0) * max(1, abs(k)) ** seq.alpha:
            raise GrowthError(f"{seq}: |a_{k}| = {vals[k]:.3g} violates the declared growth k^{seq.alpha}")


class FunctionalKind(enum.Enum):
    E = "E"
    Ebar = "Ebar"
    F = "F"
    Fbar = "Fbar"
    G = "G"
    L = "L"
    M = "M"
    Mbar = "Mbar"
    T = "T"
    Rj = "Rj"
    Rhat = "Rhat"


FINITE = {FunctionalKind.E, FunctionalKind.Ebar, FunctionalKind.G}


def _kind(kind) -> FunctionalKind:
    return kind if isinstance(kind, FunctionalKind) else FunctionalKind(kind)


# ---------------------------------------------------------------------------
# finite functionals (exact)


def finite_functional(kind, A: Seq, n: int, j: int) -> Fraction:
    """E_n(j), Ebar_n(j) or G_n(j) as an exact rational (``a_k`` rational)."""
    kind = _kind(kind)
    if j < 1:
        raise DomainError("j must be >= 1")
    if n < 0:
        raise DomainError("n must be >= 0")
    if n == 0:
        return Fraction(0)
    if kind is FunctionalKind.E:
        return sum((Fraction(A(n - k)) / k**j for k in range(1, n + 1)), Fraction(0))
    if kind is FunctionalKind.Ebar:
        return sum((Fraction(A(k - n - 1)) / k**j for k in range(1, n + 1)), Fraction(0))
    if kind is FunctionalKind.G:
        return (
            finite_functional(FunctionalKind.E, A, n, j)
            - finite_functional(FunctionalKind.Ebar, A, n - 1, j)
            - Fraction(A(0)) / n**j
        )
    raise ValueError(f"{kind} is not a finite functional")


# ---------------------------------------------------------------------------
# direct (definitional) route


def _to_fixed(x, bits: int) -> int:
    if isinstance(x, int):
        return x << bits
    if isinstance(x, Fraction):
        return (x.numerator << bits) // x.denominator
    return mpf_to_fixed(x, bits)


def _term_kernel(term: Callable[[int, int], int]):
    """Kernel summing term(k, bits) for k = 1, 2, ..."""

    def run(bits, stops):
        s = 0
        t = 0
        k = 1
        stop = next(stops)
        while True:
            t = term(k, bits)
            s += t
            if k == stop:
                yield s, t
                stop = next(stops)
            k += 1

    return run


def _direct_series(A: Seq, cfg: EvalConfig, term, decay: float, label: str) -> mpf:
    if A.period is None:
        cfg = cfg.with_(accel="direct+tail-bound")
    return sum_series(_term_kernel(term), cfg, decay=decay, period=A.period or 1, label=label).value


def _direct_F(A: Seq, n: int, j: int, cfg: EvalConfig, bar: bool) -> mpf:
    sgn = -1 if bar else 1
    if j == 1:
        fn = lambda k, bits: _to_fixed(Fraction(A(k + sgn * n)) - Fraction(A(k)), bits) // k
    else:
        fn = lambda k, bits: _to_fixed(A(k + sgn * n), bits) // k**j
    return _direct_series(A, cfg, fn, j - A.alpha, f"F{'bar' if bar else ''}_{n}({j})")


def _direct_R(A: Seq, j: int, cfg: EvalConfig, hat: bool) -> mpf:
    off = -1 if hat else 0
    if j == 1:

        def fn(k, bits):
            num = _to_fixed(A(k + off), bits)
            return (num << 1) // (2 * k - 1) - _to_fixed(A(k), bits) // k

    else:
        fn = lambda k, bits: (_to_fixed(A(k + off), bits) << j) // (2 * k - 1) ** j
    return _direct_series(A, cfg, fn, max(j, 2) - A.alpha, f"R{'hat' if hat else ''}({j})")


def seq_functional(kind, A: Seq, n: int, j: int, cfg: EvalConfig = DEFAULT, method: str = "direct") -> mpf:
    """Value of a Definition-style functional of ``A``.

    ``n`` is ignored for ``Rj``/``Rhat``.  Finite kinds are computed exactly and
    rounded; infinite ones by the definitional series (``method='direct'``) or
    residue-class special functions (``method='hurwitz'``, periodic only).
    """
    kind = _kind(kind)
    if j < 1:
        raise DomainError(f"j must be >= 1, got {j}")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if kind is FunctionalKind.Mbar and n < 1:
        raise DomainError("Mbar_n needs n >= 1")
    if method == "hurwitz":
        return _periodic(A, cfg).value(kind, n, j)
    if method != "direct":
        raise ValueError(f"unknown method {method!r}")
    with mpmath.workdps(cfg.work_dps):
        if kind in FINITE and A.values is not None or (kind in FINITE and _rational_terms(A, n)):
            v = finite_functional(kind, A, n, j)
            return mpf(v.numerator) / v.denominator
        if kind in FINITE:
            return _finite_numeric(kind, A, n, j)
        sgn = (-1) ** j
        F = lambda bar: _direct_F(A, n, j, cfg, bar)
        if kind is FunctionalKind.F:
            return F(False)
        if kind is FunctionalKind.Fbar:
            return F(True)
        if kind is FunctionalKind.L:
            return F(False) + sgn * F(True)
        if kind is FunctionalKind.M:
            return seq_functional("E", A, n, j, cfg) + sgn * F(False)
        if kind is FunctionalKind.Mbar:
            return F(True) - seq_functional("Ebar", A, n - 1, j, cfg)
        if kind is FunctionalKind.T:
            return seq_functional("G", A, n, j, cfg) + sgn * (F(False) + sgn * F(True))
        if kind is FunctionalKind.Rj:
            return _direct_R(A, j, cfg, hat=False)
        if kind is FunctionalKind.Rhat:
            return _direct_R(A, j, cfg, hat=True)
    raise ValueError(kind)


def _rational_terms(A: Seq, n: int) -> bool:
    return all(isinstance(A(k), (int, Fraction)) for k in range(-n - 1, n + 1))


def _finite_numeric(kind, A, n, j):
    if n == 0:
        return mpf(0)
    if kind is FunctionalKind.E:
        return mpmath.fsum(_real(A(n - k)) / mpf(k) ** j for k in range(1, n + 1))
    if kind is FunctionalKind.Ebar:
        return mpmath.fsum(_real(A(k - n - 1)) / mpf(k) ** j for k in range(1, n + 1))
    return _finite_numeric(FunctionalKind.E, A, n, j) - _finite_numeric(FunctionalKind.Ebar, A, n - 1, j) - _real(A(0)) / mpf(n) ** j


# ---------------------------------------------------------------------------
# periodic route


def hurwitz(p: int, a: mpf) -> mpf:
    """sum_{m>=0} (m + a)^-p for real non-integer-pole a (shifted to a > 0 first)."""
    head = mpf(0)
    while a <= 0:
        head += (a) ** (-p)
        a += 1
    return head + mpmath.zeta(p, a)


class _Periodic:
    """Residue-class constants of a periodic sequence at one precision."""

    def __init__(self, A: Seq, cfg: EvalConfig):
        if A.period is None:
            raise DomainError(f"{A} is not periodic")
        self.A = A
        self.P = A.period
        self.cfg = cfg
        self.a = [mpf(v.numerator) / v.denominator for v in A.values]
        self._z: dict[int, list[mpf]] = {}
        self._zh: dict[int, list[mpf]] = {}

    def av(self, k: int) -> mpf:
        return self.a[k % self.P]

    def zclass(self, j: int) -> list[mpf]:
        """Z[c] = sum_{k>=1, k = c mod P} k^-j ; regularized (-psi) for j = 1."""
        if j not in self._z:
            P = self.P
            with mpmath.workdps(self.cfg.work_dps + 10):
                out = []
                for c in range(P):
                    rep = c if c else P
                    if j == 1:
                        out.append(-mpmath.digamma(mpf(rep) / P) / P)
                    else:
                        out.append(mpmath.zeta(j, mpf(rep) / P) / mpf(P) ** j)
            self._z[j] = out
        return self._z[j]

    def zhalf(self, j: int) -> list[mpf]:
        """Same with k replaced by k - 1/2."""
        if j not in self._zh:
            P = self.P
            with mpmath.workdps(self.cfg.work_dps + 10):
                out = []
                for c in range(P):
                    rep = c if c else P
                    x = (rep - mpf(1) / 2) / P
                    out.append(-mpmath.digamma(x) / P if j == 1 else mpmath.zeta(j, x) / mpf(P) ** j)
            self._zh[j] = out
        return self._zh[j]

    def class_sums(self, n: int, j: int) -> list[mpf]:
        s = [mpf(0)] * self.P
        for k in range(1, n + 1):
            s[k % self.P] += mpf(k) ** (-j)
        return s

    def value(self, kind, n: int, j: int) -> mpf:
        K = FunctionalKind
        kind = _kind(kind)
        P, av = self.P, self.av
        with mpmath.workdps(self.cfg.work_dps + 10):
            sgn = (-1) ** j
            if kind in (K.E, K.Ebar, K.G):
                S = self.class_sums(n, j)
                if kind is K.E:
                    return mpmath.fsum(av(n - c) * S[c] for c in range(P))
                if kind is K.Ebar:
                    return mpmath.fsum(av(c - n - 1) * S[c] for c in range(P))
                return mpmath.fsum((av(n - c) - av(c - n)) * S[c] for c in range(P))
            if kind in (K.F, K.Fbar):
                sh = n if kind is K.F else -n
                Z = self.zclass(j)
                if j == 1:
                    return mpmath.fsum((av(c + sh) - av(c)) * Z[c] for c in range(P))
                return mpmath.fsum(av(c + sh) * Z[c] for c in range(P))
            if kind is K.L:
                return self.value(K.F, n, j) + sgn * self.value(K.Fbar, n, j)
            if kind is K.M:
                return self.value(K.E, n, j) + sgn * self.value(K.F, n, j)
            if kind is K.Mbar:
                return self.value(K.Fbar, n, j) - self.value(K.Ebar, n - 1, j)
            if kind is K.T:
                return self.value(K.G, n, j) + sgn * self.value(K.L, n, j)
            if kind in (K.Rj, K.Rhat):
                Zh = self.zhalf(j)
                off = -1 if kind is K.Rhat else 0
                if j == 1:
                    Z = self.zclass(1)
                    return mpmath.fsum(av(c + off) * Zh[c] - av(c) * Z[c] for c in range(P))
                return mpmath.fsum(av(c + off) * Zh[c] for c in range(P))
        raise ValueError(kind)


@lru_cache(maxsize=256)
def _periodic(A: Seq, cfg: EvalConfig) -> _Periodic:
    return _Periodic(A, cfg)


def functional_value(kind, A: Seq, n: int, j: int, cfg: EvalConfig = DEFAULT) -> mpf:
    """Fast evaluation: residue classes for periodic A, definitional series otherwise."""
    if A.period is not None:
        return seq_functional(kind, A, n, j, cfg, method="hurwitz")
    return seq_functional(kind, A, n, j, cfg)


def R_A(A: Seq, j: int, cfg: EvalConfig = DEFAULT) -> mpf:
    """R^(A)(j) = sum a_k/(k-1/2)^j (regularized for j = 1)."""
    return functional_value(FunctionalKind.Rj, A, 0, j, cfg)


def Rhat_A(A: Seq, j: int, cfg: EvalConfig = DEFAULT) -> mpf:
    """Rhat^(A)(j) = sum a_{k-1}/(k-1/2)^j (regularized for j = 1)."""
    return functional_value(FunctionalKind.Rhat, A, 0, j, cfg)


class FunctionalStream:
    """Fixed-point values of functionals of a periodic sequence at n = 0, 1, 2, ...

    ``step(n)`` must be called with n = 0, 1, 2, ... in order; afterwards
    ``get(kind, j)`` returns the value at index n and ``get_prev`` at n - 1.
    ``Mbar`` at index n uses ``Ebar_{n-1}`` and therefore needs n >= 1.
    """

    def __init__(self, A: Seq, orders: Sequence[int], cfg: EvalConfig, bits: int):
        if A.period is None:
            raise DomainError(f"{A} is not periodic")
        per = _periodic(A, cfg)
        self.P = P = A.period
        self.bits = bits
        self.orders = sorted(set(orders))
        den = 1
        for v in A.values:
            den = den * v.denominator // math.gcd(den, v.denominator)
        self.den = den
        self.num = [int(v * den) for v in A.values]
        with mpmath.workdps(cfg.work_dps + 10):
            self.Z = {j: [mpf_to_fixed(z, bits) for z in per.zclass(j)] for j in self.orders}
        self.S = {j: [0] * P for j in self.orders}
        self.n = -1
        self.cur: dict = {}
        self.prev: dict = {}

    def step(self, n: int):
        if n != self.n + 1:
            raise ValueError("FunctionalStream.step must advance by one")
        self.n = n
        P, num, den, bits = self.P, self.num, self.den, self.bits
        one = 1 << bits
        if n > 0:
            for j in self.orders:
                self.S[j][n % P] += one // n**j
        self.prev = self.cur
        cur = {}
        for j in self.orders:
            S, Z = self.S[j], self.Z[j]
            a = lambda k: num[k % P]
            E = sum(a(n - c) * S[c] for c in range(P)) // den
            G = sum((a(n - c) - a(c - n)) * S[c] for c in range(P)) // den
            if j == 1:
                F = sum((a(c + n) - a(c)) * Z[c] for c in range(P)) // den
                Fb = sum((a(c - n) - a(c)) * Z[c] for c in range(P)) // den
            else:
                F = sum(a(c + n) * Z[c] for c in range(P)) // den
                Fb = sum(a(c - n) * Z[c] for c in range(P)) // den
            sgn = -1 if j & 1 else 1
            L = F + sgn * Fb
            cur[("E", j)] = E
            cur[("G", j)] = G
            cur[("F", j)] = F
            cur[("Fbar", j)] = Fb
            cur[("L", j)] = L
            cur[("M", j)] = E + sgn * F
            cur[("T", j)] = G + sgn * L
            if n > 0:
                Eb_prev = sum(a(c - n) * S[c] for c in range(P)) // den - (num[0] * one // den) // n**j
                cur[("Mbar", j)] = Fb - Eb_prev
        self.cur = cur

    def get(self, kind: str, j: int) -> int:
        return self.cur[(kind, j)]

    def get_prev(self, kind: str, j: int) -> int:
        return self.prev[(kind, j)]

    def a_fixed(self, k: int) -> int:
        return (self.num[k % self.P] << self.bits) // self.den


# ---------------------------------------------------------------------------
# closed forms for A1 / A2


def seq_functional_closed(kind, seqkind: str, n: int, j: int) -> SymExpr:
    """Closed forms of M, Mbar, T for A1 and A2 as exact symbolic expressions."""
    kind = _kind(kind)
    if seqkind not in ("A1", "A2"):
        raise ValueError("closed forms exist for A1 and A2 only")
    if kind not in (FunctionalKind.M, FunctionalKind.Mbar, FunctionalKind.T):
        raise ValueError(f"no closed form implemented for {kind.value}")
    if kind is FunctionalKind.Mbar and n < 1:
        raise DomainError("Mbar_n needs n >= 1")
    sj = (-1) ** j
    if seqkind == "A1":
        if kind is FunctionalKind.M:
            return SymExpr.const(harmonic(n, j)) + sj * Zeta(j)
        if kind is FunctionalKind.Mbar:
            return Zeta(j) - SymExpr.const(harmonic(n - 1, j))
        return (1 + sj) * Zeta(j)
    sn1 = (-1) ** (n - 1)
    tail = (1 - (-1) ** n) * LOG2 if j == 1 else sn1 * Eta(j)
    if kind is FunctionalKind.M:
        return SymExpr.const(sn1 * harmonic(n, j, alternating=True)) + sj * tail
    if kind is FunctionalKind.Mbar:
        return SymExpr.const((-1) ** n * harmonic(n - 1, j, alternating=True)) + tail
    return sn1 * (1 + sj) * Eta(j)


# ---------------------------------------------------------------------------
# parametric digamma and cotangent


def _real(s) -> mpf:
    """Convert ints, Fractions, strings and floats to mpf at the current precision."""
    if isinstance(s, Fraction):
        return mpf(s.numerator) / s.denominator
    return mpf(s)


def _is_int(s: mpf) -> bool:
    return mpmath.isint(s)


def psi_param(s, A: Seq, p: int, cfg: EvalConfig = DEFAULT, method: str = "auto") -> mpf:
    """Psi^(p-1)(-s; A)/(p-1)!.

    p = 1: a_0/s + sum (a_k/k - a_k/(k-s));  p >= 2: a_0/s^p + (-1)^p sum a_k/(k-s)^p.
    """
    if p < 1:
        raise DomainError("p must be >= 1")
    with mpmath.workdps(cfg.work_dps + 10):
        s = _real(s)
        removable = False
        if _is_int(s) and s >= 0:
            if A(int(s)) != 0:
                raise PoleError(int(s))
            # a_s = 0 removes the pole; the residue-class split would still hit it
            removable = True
            method = "direct"
        if method == "auto":
            method = "hurwitz" if A.period is not None else "direct"
        a0 = _real(A(0))
        head = a0 / s**p if a0 else mpf(0)
        if method == "hurwitz":
            per = _periodic(A, cfg)
            P = per.P
            tot = mpf(0)
            for c in range(P):
                rep = c if c else P
                if p == 1:
                    tot += per.av(c) * (mpmath.digamma((rep - s) / P) - mpmath.digamma(mpf(rep) / P)) / P
                else:
                    tot += per.av(c) * hurwitz(p, (rep - s) / P) / mpf(P) ** p
            body = tot
        else:
            sfix = s

            def fn(k, bits):
                ak = _real(A(k))
                if removable and k == sfix:
                    return mpf_to_fixed(ak / k, bits) if p == 1 else 0
                if p == 1:
                    t = ak / k - ak / (k - sfix)
                else:
                    t = ak / (k - sfix) ** p
                return mpf_to_fixed(t, bits)

            body = _direct_series(A, cfg, fn, p + (1 if p == 1 else 0) - A.alpha, "psi_param")
        if p == 1:
            return +(head + body)
        return +(head + (-1) ** p * body)


def cot_param(s, A: Seq, cfg: EvalConfig = DEFAULT, method: str = "auto") -> mpf:
    """pi cot(pi s; A) = a_0/s - 2 s sum_{k>=1} a_k/(k^2 - s^2)."""
    with mpmath.workdps(cfg.work_dps + 10):
        s = _real(s)
        if _is_int(s):
            k = abs(int(s))
            if k == 0 and A(0) != 0 or k != 0 and A(k) != 0:
                raise PoleError(int(s))
            method = "direct"
        if method == "auto":
            method = "hurwitz" if A.period is not None else "direct"
        if method == "hurwitz":
            a0 = _periodic(A, cfg).av(0)
            return +(-a0 / s + psi_param(s, A, 1, cfg, "hurwitz") - psi_param(-s, A, 1, cfg, "hurwitz"))
        a0 = _real(A(0))
        sfix = s

        def fn(k, bits):
            ak = _real(A(k))
            if not ak:
                return 0
            return mpf_to_fixed(ak / (k * k - sfix * sfix), bits)

        body = _direct_series(A, cfg, fn, 2 - A.alpha, "cot_param")
        return +((a0 / s if a0 else 0) - 2 * s * body)


# ---------------------------------------------------------------------------
# Laurent expansions


@dataclass(frozen=True)
class LaurentProbe:
    """Evaluation point for one of the local expansions.

    ``lemma`` is one of ``'2.1'`` (center n >= 0), ``'2.2'`` (center -n, n >= 1),
    ``'2.3'`` (center n in Z), ``'4.3a'`` (center n - 1/2, n >= 0) and ``'4.3b'``
    (center 1/2 - n, n >= 1).
    """

    lemma: str
    n: int
    p: int
    J: int
    s: object

    @property
    def center(self) -> Fraction:
        if self.lemma == "2.1":
            return Fraction(self.n)
        if self.lemma == "2.2":
            return Fraction(-self.n)
        if self.lemma == "2.3":
            return Fraction(self.n)
        if self.lemma == "4.3a":
            return Fraction(2 * self.n - 1, 2)
        if self.lemma == "4.3b":
            return Fraction(1 - 2 * self.n, 2)
        raise ValueError(f"unknown lemma {self.lemma!r}")

    def __post_init__(self):
        self.center
        if self.lemma in ("2.2", "4.3b") and self.n < 1:
            raise DomainError(f"Lemma {self.lemma} needs n >= 1")
        if self.lemma in ("2.1", "4.3a") and self.n < 0:
            raise DomainError(f"Lemma {self.lemma} needs n >= 0")
        if self.p < 1 or self.J < 1:
            raise DomainError("p and J must be >= 1")


def laurent_terms(probe: LaurentProbe, A: Seq | None, cfg: EvalConfig = DEFAULT, extra: int = 0) -> list[mpf]:
    """Coefficients c_1..c_{J+extra} of the expansion (the j-th multiplies the j-th power term)."""
    n, p = probe.n, probe.p
    out = []
    with mpmath.workdps(cfg.work_dps + 10):
        for j in range(1, probe.J + extra + 1):
            if probe.lemma == "2.1":
                c = (-1) ** j * math.comb(j + p - 2, p - 1) * functional_value("M", A, n, j + p - 1, cfg)
            elif probe.lemma == "2.2":
                c = (-1) ** p * math.comb(j + p - 2, p - 1) * functional_value("Mbar", A, n, j + p - 1, cfg)
            elif probe.lemma == "2.3":
                sig = 1 if n >= 0 else -1
                c = (-sig) ** j * functional_value("T", A, abs(n), j, cfg)
            else:
                k = j
                w = k + p - 1
                if probe.lemma == "4.3a":
                    hv = harmonic(n, w, odd=True)
                    inner = r_single(w, cfg) + (-1) ** (k + p - 1) * mpf(hv.numerator) / hv.denominator
                else:
                    hv = harmonic(n - 1, w, odd=True)
                    inner = r_single(w, cfg) - mpf(hv.numerator) / hv.denominator
                c = (-1) ** p * math.comb(k + p - 2, p - 1) * inner
            out.append(c)
    return out


def laurent_expansion(probe: LaurentProbe, A: Seq | None, cfg: EvalConfig = DEFAULT) -> mpf:
    """The truncated expansion evaluated at ``probe.s``."""
    coeffs = laurent_terms(probe, A, cfg)
    n, p = probe.n, probe.p
    with mpmath.workdps(cfg.work_dps + 10):
        s = _real(probe.s)
        c0 = probe.center
        d = s - mpf(c0.numerator) / c0.denominator
        if probe.lemma == "2.1":
            an = _real(A(n))
            body = an - mpmath.fsum(c * d ** (j + p - 1) for j, c in enumerate(coeffs, 1))
            return body / d**p
        if probe.lemma == "2.3":
            return _real(A(abs(n))) / d - mpmath.fsum(c * d ** (j - 1) for j, c in enumerate(coeffs, 1))
        return mpmath.fsum(c * d ** (j - 1) for j, c in enumerate(coeffs, 1))


def laurent_direct(probe: LaurentProbe, A: Seq | None, cfg: EvalConfig = DEFAULT) -> mpf:
    """The function the expansion approximates, evaluated directly."""
    with mpmath.workdps(cfg.work_dps + 10):
        s = _real(probe.s)
        if probe.lemma in ("2.1", "2.2"):
            return psi_param(s, A, probe.p, cfg)
        if probe.lemma == "2.3":
            return cot_param(s, A, cfg)
        p = probe.p
        if _is_int(s) and s >= 0:
            raise PoleError(int(s))
        if p == 1:
            return mpmath.digamma(-s) + mpmath.euler
        return mpmath.psi(p - 1, -s) / math.factorial(p - 1)


def laurent_residual(probe: LaurentProbe, A: Seq | None = None, cfg: EvalConfig = DEFAULT) -> mpf:
    """|direct value - truncated expansion| at the probe point."""
    c0 = probe.center
    with mpmath.workdps(cfg.work_dps + 10):
        s = _real(probe.s)
        d = abs(s - mpf(c0.numerator) / c0.denominator)
        if not 0 < d < 1:
            raise DomainError(f"probe point must satisfy 0 < |s - center| < 1, got {mpmath.nstr(d, 5)}")
        if probe.lemma.startswith("2") and A is None:
            raise ValueError(f"Lemma {probe.lemma} needs a sequence")
        return abs(laurent_direct(probe, A, cfg) - laurent_expansion(probe, A, cfg))


def laurent_expected_order(probe: LaurentProbe, A: Seq | None, cfg: EvalConfig = DEFAULT, eps: float = 1e-30) -> int:
    """Power of (s - center) of the first omitted nonvanishing term."""
    coeffs = laurent_terms(probe, A, cfg, extra=6)
    for j in range(probe.J + 1, len(coeffs) + 1):
        if abs(coeffs[j - 1]) > eps:
            return j - 1
    raise ValueError("no nonvanishing omitted term found")


def laurent_order(probe: LaurentProbe, A: Seq | None, cfg: EvalConfig = DEFAULT, shrink: int = 2) -> float:
    """Observed decay order when the probe distance is divided by ``shrink``."""
    c0 = probe.center
    with mpmath.workdps(cfg.work_dps + 10):
        s = _real(probe.s)
        cen = mpf(c0.numerator) / c0.denominator
        s2 = cen + (s - cen) / shrink
        r1 = laurent_residual(probe, A, cfg)
        r2 = laurent_residual(LaurentProbe(probe.lemma, probe.n, probe.p, probe.J, s2), A, cfg)
        return float(mpmath.log(r1 / r2) / mpmath.log(shrink))


# ---------------------------------------------------------------------------
# derivatives of the cotangent at -1/2


def cot_derivative(m: int, A: Seq, x=mpf(-1) / 2, cfg: EvalConfig = DEFAULT, h=mpf("1e-3")) -> mpf:
    """m-th derivative of pi cot(pi s; A) by central differences with Richardson (h, h/2, h/4)."""
    with mpmath.workdps(cfg.work_dps + 20):
        x = _real(x)
        h = _real(h)
        f = lambda s: cot_param(s, A, cfg)
        if m == 0:
            return f(x)

        def central(step):
            return mpmath.fsum(
                (-1) ** i * math.comb(m, i) * f(x + (mpf(m) / 2 - i) * step) for i in range(m + 1)
            ) / step**m

        d1, d2, d4 = central(h), central(h / 2), central(h / 4)
        r1 = (4 * d2 - d1) / 3
        r2 = (4 * d4 - d2) / 3
        return (16 * r2 - r1) / 15


def cot_derivative_closed(m: int, A: Seq, cfg: EvalConfig = DEFAULT) -> mpf:
    """m! ((-1)^m R^(A)(m+1) - Rhat^(A)(m+1))."""
    with mpmath.workdps(cfg.work_dps):
        return math.factorial(m) * ((-1) ** m * R_A(A, m + 1, cfg) - Rhat_A(A, m + 1, cfg))
