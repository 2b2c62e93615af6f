"""Truncated bivariate power series and the height-one MRV generating function.

    sum_{m,n>=1} R(m+1, 1^{n-1}) x^m y^n
        = exp(-2 log2 y + 2 sum_{k>=2} (1-2^{k-1}) zeta(k) y^k / k)
        - exp(-2 log2 y + sum_{k>=2} ((2^k-1) x^k + y^k - (2^k-1)(x+y)^k) zeta(k) / k)

The coefficient of x^m y^n is R(m+1, 1, ..., 1) with n-1 trailing ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .symbolic import LOG2, ONE, ZERO, SymExpr, Zeta

DEFAULT_DEGREE = 6
MAX_DEGREE = 8


@dataclass(frozen=True, eq=False)
class BiSeries:
    """sum c_{m,n} x^m y^n truncated at total degree ``degree``."""

    degree: int
    coeffs: Mapping[tuple[int, int], SymExpr]

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be >= 0")
        clean = {
            (m, n): SymExpr._lift(c)
            for (m, n), c in dict(self.coeffs).items()
            if m + n <= self.degree and not SymExpr._lift(c).is_zero()
        }
        for m, n in clean:
            if m < 0 or n < 0:
                raise ValueError("exponents must be >= 0")
        object.__setattr__(self, "coeffs", MappingProxyType(clean))

    @classmethod
    def zero(cls, degree: int) -> "BiSeries":
        return cls(degree, {})

    @classmethod
    def one(cls, degree: int) -> "BiSeries":
        return cls(degree, {(0, 0): ONE})

    def __getitem__(self, mn: tuple[int, int]) -> SymExpr:
        return self.coeffs.get(mn, ZERO)

    def _same(self, other: "BiSeries") -> int:
        return min(self.degree, other.degree)

    def __add__(self, other: "BiSeries") -> "BiSeries":
        d = self._same(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, ZERO) + c
        return BiSeries(d, out)

    def __neg__(self) -> "BiSeries":
        return BiSeries(self.degree, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def __mul__(self, other) -> "BiSeries":
        if not isinstance(other, BiSeries):
            c = SymExpr._lift(other)
            return BiSeries(self.degree, {k: v * c for k, v in self.coeffs.items()})
        d = self._same(other)
        out: dict[tuple[int, int], SymExpr] = {}
        for (m1, n1), a in self.coeffs.items():
            for (m2, n2), b in other.coeffs.items():
                if m1 + m2 + n1 + n2 <= d:
                    k = (m1 + m2, n1 + n2)
                    out[k] = out.get(k, ZERO) + a * b
        return BiSeries(d, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.degree == other.degree and dict(self.coeffs) == dict(other.coeffs)

    def __repr__(self):
        body = " + ".join(f"({c.render()}) x^{m} y^{n}" for (m, n), c in sorted(self.coeffs.items()))
        return f"BiSeries(D={self.degree}: {body or '0'})"


def series_exp(s: BiSeries, degree: int | None = None) -> BiSeries:
    """exp(s) = sum_{j<=D} s^j / j! for a series without constant term."""
    if not s[(0, 0)].is_zero():
        raise ValueError("series_exp needs a zero constant term")
    d = s.degree if degree is None else min(degree, s.degree)
    s = BiSeries(d, s.coeffs)
    total = BiSeries.one(d)
    power = BiSeries.one(d)
    for j in range(1, d + 1):
        power = power * s
        total = total + power * SymExpr.const(Fraction(1, math.factorial(j)))
    return total


def _exponents(degree: int) -> tuple[BiSeries, BiSeries]:
    e1 = {(0, 1): -2 * LOG2}
    e2 = {(0, 1): -2 * LOG2}
    for k in range(2, degree + 1):
        zk = Zeta(k)
        e1[(0, k)] = e1.get((0, k), ZERO) + Fraction(2 * (1 - 2 ** (k - 1)), k) * zk
        e2[(k, 0)] = e2.get((k, 0), ZERO) + Fraction(2**k - 1, k) * zk
        e2[(0, k)] = e2.get((0, k), ZERO) + Fraction(1, k) * zk
        for i in range(k + 1):
            e2[(i, k - i)] = e2.get((i, k - i), ZERO) - Fraction((2**k - 1) * math.comb(k, i), k) * zk
    return BiSeries(degree, e1), BiSeries(degree, e2)


def height_one_gf(degree: int = DEFAULT_DEGREE) -> BiSeries:
    """Generating function of R(m+1, 1^{n-1}) with exact coefficients up to total degree D."""
    if degree < 2:
        raise ValueError("degree must be >= 2")
    if degree > MAX_DEGREE:
        raise ValueError(f"degree must be <= {MAX_DEGREE}")
    return _gf_cached(degree)


_GF_CACHE: dict[int, BiSeries] = {}


def _gf_cached(degree: int) -> BiSeries:
    if degree not in _GF_CACHE:
        e1, e2 = _exponents(degree)
        _GF_CACHE[degree] = series_exp(e1) - series_exp(e2)
    return _GF_CACHE[degree]


def height_one_mrv(m: int, n: int, degree: int = DEFAULT_DEGREE) -> SymExpr:
    """Exact R(m+1, 1, ..., 1) (n-1 ones) as the coefficient of x^m y^n."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be >= 1")
    if m + n > degree:
        raise ValueError(f"m+n = {m + n} exceeds the series degree {degree}")
    return height_one_gf(degree)[(m, n)]


def height_one_index(m: int, n: int) -> tuple[int, ...]:
    return (m + 1,) + (1,) * (n - 1)
