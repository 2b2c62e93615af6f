"""Harmonic numbers and numeric evaluation of Euler sums, Euler R-sums and
multiple zeta / t / T / R-values.

Notation.  ``H_n^(p)`` is the generalized harmonic number, ``Hbar_n^(p)`` its
alternating version sum (-1)^(k-1)/k^p, and ``h_n^(p)`` the odd harmonic number
sum 1/(k-1/2)^p.  An Euler sum ``S_{p1..pr,q}`` divides a product of harmonic
numbers by ``n^q`` (n >= 1); an Euler R-sum ``R_{p1..pr,q}`` by ``(n+1/2)^q``
(n >= 0).  A bar over ``q`` inserts ``(-1)^(n-1)`` resp. ``(-1)^n``.

The multiple R-value is

    R(k1,...,kr) = 2^w sum_{n1>...>nr>0} prod sgn(kj)^nj
                   / ((2 n1 - 1)^|k1| (2 n2)^|k2| ... (2 nr)^|kr|)

which the kernels evaluate in the equivalent form with denominators
``(n1 - 1/2)^|k1| n2^|k2| ... nr^|kr|``.  Nested sums are computed by running
prefix sums, one per depth level, updated outermost-first so each level sees the
previous value of the level below it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from .accel import SeriesResult, sum_series
from .hparith import DEFAULT, DomainError, EvalConfig, r_single, zeta_int


class InadmissibleIndex(DomainError):
    pass


@dataclass(frozen=True, order=True)
class HarmonicFactor:
    p: int
    alternating: bool = False

    def __post_init__(self):
        if self.p < 1:
            raise DomainError(f"harmonic order must be >= 1, got {self.p}")

    @property
    def signed(self) -> int:
        return -self.p if self.alternating else self.p


@dataclass(frozen=True)
class SumSpec:
    """An Euler sum (``base='int'``) or Euler R-sum (``base='half'``)."""

    factors: tuple[HarmonicFactor, ...]
    q: int
    base: str = "half"
    sign: bool = False

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.base not in ("int", "half"):
            raise ValueError(f"base must be 'int' or 'half', got {self.base!r}")
        if self.q < 2:
            raise DomainError(f"q must be >= 2 for convergence, got {self.q}")

    @classmethod
    def rsum(cls, ps: Iterable[int], q: int) -> "SumSpec":
        """R-sum from signed orders: negative entries are barred (also for q)."""
        return cls(tuple(HarmonicFactor(abs(p), p < 0) for p in ps), abs(q), "half", q < 0)

    @classmethod
    def ssum(cls, ps: Iterable[int], q: int) -> "SumSpec":
        return cls(tuple(HarmonicFactor(abs(p), p < 0) for p in ps), abs(q), "int", q < 0)

    @property
    def weight(self) -> int:
        return sum(f.p for f in self.factors) + self.q

    @property
    def degree(self) -> int:
        return len(self.factors)

    @property
    def log_power(self) -> int:
        return sum(1 for f in self.factors if f.p == 1 and not f.alternating)

    def render(self) -> str:
        from .parser import render_spec

        return render_spec(self)

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class MRVIndex:
    ks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ks", tuple(int(k) for k in self.ks))
        if not self.ks:
            raise InadmissibleIndex("empty index")
        if any(k == 0 for k in self.ks):
            raise InadmissibleIndex("index entries must be nonzero")
        if self.ks[0] == 1:
            raise InadmissibleIndex("inadmissible: k1=1")

    @property
    def depth(self) -> int:
        return len(self.ks)

    @property
    def weight(self) -> int:
        return sum(abs(k) for k in self.ks)

    @property
    def conditionally_convergent(self) -> bool:
        return self.ks[0] == -1

    def render(self) -> str:
        return "MRV(" + ",".join(str(k) for k in self.ks) + ")"

    def __str__(self):
        return self.render()


def _as_index(index) -> tuple[int, ...]:
    if isinstance(index, MRVIndex):
        return index.ks
    if isinstance(index, int):
        return (index,)
    return tuple(index)


# ---------------------------------------------------------------------------
# exact harmonic numbers


_HARMONIC_TABLES: dict[tuple[int, bool, bool], list[Fraction]] = {}


def harmonic(n: int, p: int, alternating: bool = False, odd: bool = False) -> Fraction:
    """H_n^(p), Hbar_n^(p) (``alternating``) or h_n^(p) (``odd``) as an exact rational."""
    if alternating and odd:
        raise ValueError("a harmonic number cannot be both alternating and odd")
    if n < 0 or p < 1:
        raise DomainError("harmonic needs n >= 0 and p >= 1")
    table = _HARMONIC_TABLES.setdefault((p, alternating, odd), [Fraction(0)])
    # appends are idempotent; a concurrent filler can only add the same values
    while len(table) <= n:
        k = len(table)
        if odd:
            t = Fraction(2**p, (2 * k - 1) ** p)
        elif alternating:
            t = Fraction((-1) ** (k - 1), k**p)
        else:
            t = Fraction(1, k**p)
        table.append(table[k - 1] + t)
    return table[n]


# ---------------------------------------------------------------------------
# fixed-point kernels


def _euler_kernel(spec: SumSpec):
    groups: dict[HarmonicFactor, int] = {}
    for f in spec.factors:
        groups[f] = groups.get(f, 0) + 1
    facs = list(groups.items())
    q = spec.q
    half = spec.base == "half"
    sign = spec.sign

    def run(bits, stops):
        one = 1 << bits
        hs = [0] * len(facs)
        s = 0
        term = 0
        n = 0 if half else 1
        count = 0
        stop = next(stops)
        while True:
            for i, (f, _) in enumerate(facs):
                if n > 0:
                    d = n**f.p
                    if f.alternating and not n & 1:
                        hs[i] -= one // d
                    else:
                        hs[i] += one // d
            prod = one
            for i, (_, mult) in enumerate(facs):
                for _ in range(mult):
                    prod = prod * hs[i] >> bits
            if half:
                term = (prod << q) // (2 * n + 1) ** q
                if sign and n & 1:
                    term = -term
            else:
                term = prod // n**q
                if sign and not n & 1:
                    term = -term
            s += term
            n += 1
            count += 1
            if count == stop:
                yield s, term
                stop = next(stops)

    return run


def _nested_kernel(ks: Sequence[int], outer_half: bool):
    """Prefix-sum kernel for zeta(ks) (outer_half False) or R(ks) (True)."""
    r = len(ks)
    ab = [abs(k) for k in ks]
    neg = [k < 0 for k in ks]

    def run(bits, stops):
        one = 1 << bits
        levels = [0] * r  # levels[j] = prefix sum of depth-levels j..r-1
        n = 1
        stop = next(stops)
        term = 0
        while True:
            for j in range(r):
                below = levels[j + 1] if j + 1 < r else one
                if j == 0 and outer_half:
                    t = (below << ab[0]) // (2 * n - 1) ** ab[0]
                else:
                    t = below // n ** ab[j]
                if neg[j] and n & 1:
                    t = -t
                levels[j] += t
                if j == 0:
                    term = t
            if n == stop:
                yield levels[0], term
                stop = next(stops)
            n += 1

    return run


def _nested_log_power(ks: Sequence[int]) -> int:
    return sum(1 for k in ks[1:] if k == 1)


def _double_kernel(kind: str, k1: int, k2: int):
    """t~(k1,k2) = sum_n h_{n-1}^(k2)/(n-1/2)^k1 ; T~(k1,k2) = sum_m h_m^(k2)/m^k1."""

    def run(bits, stops):
        one = 1 << bits
        h = 0
        s = 0
        n = 1
        stop = next(stops)
        term = 0
        while True:
            if kind == "t_tilde":
                term = (h << k1) // (2 * n - 1) ** k1
                h += (one << k2) // (2 * n - 1) ** k2
            else:
                h += (one << k2) // (2 * n - 1) ** k2
                term = h // n**k1
            s += term
            if n == stop:
                yield s, term
                stop = next(stops)
            n += 1

    return run


# ---------------------------------------------------------------------------
# public evaluators


def euler_sum(spec: SumSpec, cfg: EvalConfig = DEFAULT) -> SeriesResult:
    """Numeric value of an (alternating) Euler sum or Euler R-sum."""
    return sum_series(
        _euler_kernel(spec),
        cfg,
        log_power=spec.log_power,
        decay=spec.q,
        alternating=spec.sign,
        label=str(spec),
    )


def check_mzv_admissible(ks: Sequence[int]) -> None:
    if not ks or any(k == 0 for k in ks):
        raise InadmissibleIndex(f"zeta{tuple(ks)}: entries must be nonzero")
    if ks[0] == 1:
        raise InadmissibleIndex(f"zeta{tuple(ks)}: inadmissible: k1=1")
    acc = 0
    for j, k in enumerate(ks, start=1):
        acc += abs(k)
        if acc <= j:
            raise InadmissibleIndex(f"zeta{tuple(ks)}: |k1|+...+|k{j}| must exceed {j}")


def mzv(index, cfg: EvalConfig = DEFAULT) -> SeriesResult:
    """(Alternating) multiple zeta value; negative entries are barred."""
    ks = _as_index(index)
    check_mzv_admissible(ks)
    return sum_series(
        _nested_kernel(ks, outer_half=False),
        cfg,
        log_power=_nested_log_power(ks),
        decay=abs(ks[0]),
        alternating=ks[0] < 0,
        label=f"zeta{ks}",
    )


def mrv(index, cfg: EvalConfig = DEFAULT) -> SeriesResult:
    """(Alternating) multiple R-value R(k1,...,kr)."""
    idx = index if isinstance(index, MRVIndex) else MRVIndex(_as_index(index))
    ks = idx.ks
    return sum_series(
        _nested_kernel(ks, outer_half=True),
        cfg,
        log_power=_nested_log_power(ks),
        decay=abs(ks[0]),
        alternating=ks[0] < 0,
        label=str(idx),
    )


DOUBLE_KINDS = ("t", "T", "t_tilde", "T_tilde", "zeta2")


def double_value(kind: str, k1: int, k2: int | None = None, cfg: EvalConfig = DEFAULT) -> SeriesResult:
    """Double t-, T-, normalized t~/T~ and double zeta values.

    With ``k2=None`` the depth-one value is returned (t~(k) = T~(k) = R(k)).
    """
    if kind not in DOUBLE_KINDS:
        raise ValueError(f"kind must be one of {DOUBLE_KINDS}")
    if k1 <= 1:
        raise InadmissibleIndex(f"{kind}: k1 must be > 1, got {k1}")
    if k2 is None:
        with mpmath.workdps(cfg.work_dps):
            if kind == "zeta2":
                v = zeta_int(k1, cfg)
            else:
                v = r_single(k1, cfg)
                if kind == "t":
                    v = v / mpmath.mpf(2) ** k1
                elif kind == "T":
                    v = v / mpmath.mpf(2) ** (k1 - 1)
        return SeriesResult(v, 0, mpmath.mpf(0), "closed")
    if k2 < 1:
        raise InadmissibleIndex(f"{kind}: k2 must be >= 1, got {k2}")
    if kind == "zeta2":
        return mzv((k1, k2), cfg)
    base = "t_tilde" if kind in ("t", "t_tilde") else "T_tilde"
    res = sum_series(
        _double_kernel(base, k1, k2),
        cfg,
        log_power=1 if k2 == 1 else 0,
        decay=k1,
        label=f"{base}({k1},{k2})",
    )
    if kind in ("t", "T"):
        shift = k1 + k2 if kind == "t" else k1 + k2 - 2
        with mpmath.workdps(cfg.work_dps):
            scale = mpmath.ldexp(1, -shift)
            res = SeriesResult(res.value * scale, res.terms_used, res.err_estimate * scale, res.method, res.history)
    return res


# ---------------------------------------------------------------------------
# exact truncations (engine cross-checks)


def nested_truncated(ks: Sequence[int], n_max: int, outer_half: bool = True) -> Fraction:
    """Exact partial sum over n_max >= n1 > ... > nr > 0 via prefix sums."""
    r = len(ks)
    levels = [Fraction(0)] * r
    for n in range(1, n_max + 1):
        for j in range(r):
            k = ks[j]
            below = levels[j + 1] if j + 1 < r else Fraction(1)
            if j == 0 and outer_half:
                t = below * Fraction(2 ** abs(k), (2 * n - 1) ** abs(k))
            else:
                t = below / n ** abs(k)
            if k < 0 and n & 1:
                t = -t
            levels[j] += t
    return levels[0]


def mrv_truncated(index, n_max: int) -> Fraction:
    ks = _as_index(index)
    MRVIndex(ks)
    return nested_truncated(ks, n_max, outer_half=True)


def fixed_truncated(ks: Sequence[int], n_max: int, bits: int, outer_half: bool = True) -> int:
    """The fixed-point kernel's partial sum at ``n_max`` (for cross-checks)."""
    gen = _nested_kernel(ks, outer_half)(bits, iter([n_max]))
    value, _ = next(gen)
    gen.close()
    return value
