"""Polynomials with exact rational coefficients over a fixed set of constants.

Atoms are ``pi``, ``log 2``, ``zeta(n)``, ``eta(n)`` (written zeta-bar in
formulas), ``R(n-bar)``, the double zeta value ``zeta(a,b)`` and the normalized
double values ``T~(a,b)`` and ``t~(a,b)``.  Single R-values are not atoms:
:func:`R` rewrites them on construction.

A :class:`SymExpr` is immutable and canonical (sorted monomials, no zero
coefficients), so equality of expressions is syntactic equality.

Text form, used in reports and the catalog file::

    7 z3 - 6 z2 log2        zbar3 = eta(3)     R~4 = R(4-bar)
    z3_2 = zeta(3,2)        Tt(3,1), tt(3,1)   pi^6, 1/6
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

import mpmath
from mpmath import mpf

from .hparith import (
    DEFAULT,
    DomainError,
    EvalConfig,
    const_log2,
    const_pi,
    even_zeta_rational,
    eta_int,
    r_single,
    zeta_int,
)

_KIND_ORDER = {k: i for i, k in enumerate(["Zeta", "Eta", "Rbar", "Pi", "Log2", "DZeta", "Ttilde2", "ttilde2"])}
_ARITY = {"Zeta": 1, "Eta": 1, "Rbar": 1, "Pi": 0, "Log2": 0, "DZeta": 2, "Ttilde2": 2, "ttilde2": 2}


@dataclass(frozen=True)
class Atom:
    kind: str
    args: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in _ARITY:
            raise ValueError(f"unknown atom kind {self.kind!r}")
        if len(self.args) != _ARITY[self.kind]:
            raise ValueError(f"{self.kind} takes {_ARITY[self.kind]} arguments")
        lo = {"Zeta": (2,), "Eta": (1,), "Rbar": (1,), "DZeta": (2, 1), "Ttilde2": (2, 1), "ttilde2": (2, 1)}
        for a, m in zip(self.args, lo.get(self.kind, ())):
            if a < m:
                raise DomainError(f"{self.kind}{self.args}: argument below {m}")

    def key(self):
        return (_KIND_ORDER[self.kind], self.args)

    def __lt__(self, other: "Atom"):
        return self.key() < other.key()

    def render(self) -> str:
        a = self.args
        return {
            "Zeta": lambda: f"z{a[0]}" if a else "",
            "Eta": lambda: f"zbar{a[0]}",
            "Rbar": lambda: f"R~{a[0]}",
            "Pi": lambda: "pi",
            "Log2": lambda: "log2",
            "DZeta": lambda: f"z{a[0]}_{a[1]}",
            "Ttilde2": lambda: f"Tt({a[0]},{a[1]})",
            "ttilde2": lambda: f"tt({a[0]},{a[1]})",
        }[self.kind]()


Monomial = tuple[tuple[Atom, int], ...]
Number = Union[int, Fraction]


def _mono_key(m: Monomial):
    return (sum(p for _, p in m), tuple((a.key(), p) for a, p in m))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    d = dict(a)
    for atom, p in b:
        d[atom] = d.get(atom, 0) + p
    return tuple(sorted(d.items(), key=lambda ap: ap[0].key()))


class SymExpr:
    """Sum of rational multiples of monomials in constant atoms."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Number] | Iterable[tuple[Monomial, Number]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for mono, c in items:
            mono = tuple(sorted(((a, p) for a, p in mono if p), key=lambda ap: ap[0].key()))
            acc[mono] = acc.get(mono, Fraction(0)) + Fraction(c)
        self._terms = tuple(sorted(((m, c) for m, c in acc.items() if c), key=lambda mc: _mono_key(mc[0])))
        self._hash = hash(self._terms)

    # construction helpers

    @classmethod
    def const(cls, c: Number) -> "SymExpr":
        return cls({(): c})

    @classmethod
    def atom(cls, kind: str, *args: int) -> "SymExpr":
        return cls({((Atom(kind, tuple(args)), 1),): 1})

    @property
    def terms(self) -> tuple[tuple[Monomial, Fraction], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def atoms(self) -> set[Atom]:
        return {a for m, _ in self._terms for a, _ in m}

    def coefficient(self, *factors: tuple[Atom, int] | "SymExpr") -> Fraction:
        """Coefficient of the monomial built from the given atom expressions."""
        mono: Monomial = ()
        for f in factors:
            if isinstance(f, SymExpr):
                ((m, c),) = f.terms
                mono = _mono_mul(mono, m)
            else:
                mono = _mono_mul(mono, (f,))
        return dict(self._terms).get(mono, Fraction(0))

    # arithmetic

    @staticmethod
    def _lift(x) -> "SymExpr":
        if isinstance(x, SymExpr):
            return x
        if isinstance(x, (int, Fraction)):
            return SymExpr.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return SymExpr(list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self):
        return SymExpr((m, -c) for m, c in self._terms)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymExpr((m, c * other) for m, c in self._terms)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = []
        for m1, c1 in self._terms:
            for m2, c2 in other._terms:
                out.append((_mono_mul(m1, m2), c1 * c2))
        return SymExpr(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomial")
        out = SymExpr.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymExpr.const(other)
        if not isinstance(other, SymExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"SymExpr({self.render()!r})"

    def __str__(self):
        return self.render()

    def map_atoms(self, fn) -> "SymExpr":
        """Substitute each atom by ``fn(atom)`` (a SymExpr, or None to keep it)."""
        out = SymExpr()
        for mono, c in self._terms:
            t = SymExpr.const(c)
            for atom, p in mono:
                sub = fn(atom)
                t = t * ((SymExpr({((atom, 1),): 1}) if sub is None else sub) ** p)
            out = out + t
        return out

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (mono, c) in enumerate(self._terms):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            coef = f"{a.numerator}" if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
            body = " ".join(atom.render() + (f"^{p}" if p > 1 else "") for atom, p in mono)
            if body and a == 1:
                text = body
            elif body:
                text = f"{coef} {body}"
            else:
                text = coef
            if i == 0:
                parts.append(("-" if sign == "-" else "") + text)
            else:
                parts.append(f"{sign} {text}")
        return " ".join(parts)


# ---------------------------------------------------------------------------
# builders with the paper's conventions

PI = SymExpr.atom("Pi")
LOG2 = SymExpr.atom("Log2")
ONE = SymExpr.const(1)
ZERO = SymExpr()


def Zeta(n: int) -> SymExpr:
    """zeta(n) with zeta(0) := -1/2 and zeta(1) := 0."""
    if n == 0:
        return SymExpr.const(Fraction(-1, 2))
    if n == 1:
        return ZERO
    return SymExpr.atom("Zeta", n)


def Eta(n: int) -> SymExpr:
    return SymExpr.atom("Eta", n)


def ZetaBar(n: int) -> SymExpr:
    """zeta(n-bar) = -eta(n), with zeta(0-bar) := -1/2 (so zeta(1-bar) = -log 2)."""
    if n == 0:
        return SymExpr.const(Fraction(-1, 2))
    return -Eta(n)


def R(n: int) -> SymExpr:
    """Single R-value; negative n means R(|n|-bar)."""
    if n == 0:
        raise DomainError("R(0) is undefined")
    if n == 1:
        return 2 * LOG2
    if n > 1:
        return (2**n - 1) * Zeta(n)
    return SymExpr.atom("Rbar", -n)


def Rbar(n: int) -> SymExpr:
    return R(-n)


def DZeta(a: int, b: int) -> SymExpr:
    return SymExpr.atom("DZeta", a, b)


def Ttilde2(a: int, b: int) -> SymExpr:
    return SymExpr.atom("Ttilde2", a, b)


def ttilde2(a: int, b: int) -> SymExpr:
    return SymExpr.atom("ttilde2", a, b)


# ---------------------------------------------------------------------------
# normalization


@lru_cache(maxsize=None)
def euler_number(n: int) -> int:
    """Euler (secant) numbers E_n: E_0 = 1, E_2 = -1, E_4 = 5, ..."""
    if n % 2:
        return 0
    e = [0] * (n + 1)
    e[0] = 1
    for m in range(2, n + 1, 2):
        e[m] = -sum(math.comb(m, k) * e[k] for k in range(0, m, 2))
    return e[n]


def beta_odd_rational(n: int) -> Fraction:
    """beta(n) = c pi^n for odd n; returns c."""
    if n % 2 == 0 or n < 1:
        raise DomainError("beta closed form needs odd n >= 1")
    k = (n - 1) // 2
    return Fraction((-1) ** k * euler_number(2 * k), 4 ** (k + 1) * math.factorial(2 * k))


def _normal_rule(atom: Atom):
    if atom.kind == "Eta":
        n = atom.args[0]
        if n == 1:
            return LOG2
        return _normal_rule_zeta(n, (1 - Fraction(2) ** (1 - n)))
    if atom.kind == "Zeta":
        return _normal_rule_zeta(atom.args[0], Fraction(1))
    if atom.kind == "Rbar" and atom.args[0] % 2 == 1:
        n = atom.args[0]
        return SymExpr.const(-(2**n) * beta_odd_rational(n)) * PI**n
    return None


def _normal_rule_zeta(n: int, scale: Fraction) -> SymExpr:
    if n % 2 == 0:
        return SymExpr.const(scale * even_zeta_rational(n)) * PI**n
    return scale * Zeta(n)


def normalize_even_zeta(e: SymExpr) -> SymExpr:
    """Rewrite eta(j) to zeta, even zeta(2k) and odd R(n-bar) to rational multiples of pi-powers."""
    return e.map_atoms(_normal_rule)


def sym_equal(a: SymExpr, b: SymExpr) -> bool:
    """Canonical equality after normalization."""
    return normalize_even_zeta(a) == normalize_even_zeta(b)


# ---------------------------------------------------------------------------
# evaluation


def eval_atom(atom: Atom, cfg: EvalConfig = DEFAULT) -> mpf:
    return _eval_atom(atom, cfg)


@lru_cache(maxsize=4096)
def _eval_atom(atom: Atom, cfg: EvalConfig) -> mpf:
    from .sums import double_value, mzv

    a = atom.args
    k = atom.kind
    if k == "Pi":
        return const_pi(cfg)
    if k == "Log2":
        return const_log2(cfg)
    if k == "Zeta":
        return zeta_int(a[0], cfg)
    if k == "Eta":
        return eta_int(a[0], cfg)
    if k == "Rbar":
        return r_single(-a[0], cfg)
    if k == "DZeta":
        return mzv(a, cfg).value
    if k == "Ttilde2":
        return double_value("T_tilde", a[0], a[1], cfg).value
    if k == "ttilde2":
        return double_value("t_tilde", a[0], a[1], cfg).value
    raise ValueError(k)


def eval_sym(e: SymExpr, cfg: EvalConfig = DEFAULT) -> mpf:
    """Numeric value of ``e``; series-valued atoms go through the series engine."""
    with mpmath.workdps(cfg.work_dps):
        total = mpf(0)
        for mono, c in e.terms:
            t = mpf(c.numerator) / c.denominator
            for atom, p in mono:
                t *= eval_atom(atom, cfg) ** p
            total += t
        return total


# ---------------------------------------------------------------------------
# parsing of the text form

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<op>[+-])|(?P<pow>\^\d+)"
    r"|(?P<atom>pi|log2|zbar\d+|R~\d+|z\d+_\d+|z\d+|Tt\(\d+,\d+\)|tt\(\d+,\d+\)))"
)


def _parse_atom(tok: str) -> SymExpr:
    if tok == "pi":
        return PI
    if tok == "log2":
        return LOG2
    if tok.startswith("zbar"):
        return Eta(int(tok[4:]))
    if tok.startswith("R~"):
        return SymExpr.atom("Rbar", int(tok[2:]))
    if tok.startswith(("Tt(", "tt(")):
        a, b = (int(x) for x in tok[3:-1].split(","))
        return Ttilde2(a, b) if tok[0] == "T" else ttilde2(a, b)
    if "_" in tok:
        a, b = (int(x) for x in tok[1:].split("_"))
        return DZeta(a, b)
    return SymExpr.atom("Zeta", int(tok[1:]))


def parse_sym(text: str) -> SymExpr:
    """Inverse of :meth:`SymExpr.render`."""
    pos = 0
    text = text.strip()
    if text == "0":
        return ZERO
    total = ZERO
    sign = 1
    term: SymExpr | None = None
    last: SymExpr | None = None
    factors: list[SymExpr] = []

    def flush():
        nonlocal term, factors
        if term is None and not factors:
            raise ValueError(f"empty term in {text!r}")
        t = term if term is not None else ONE
        for f in factors:
            t = t * f
        return t

    expecting_term = True
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse symbolic expression at position {pos}: {text!r}")
        pos = m.end()
        if m.group("op"):
            if not expecting_term:
                total = total + sign * flush()
                term, factors = None, []
            elif m.start() != 0 or m.group("op") != "-":
                # only a single leading minus may precede the first term
                raise ValueError(f"unexpected {m.group('op')!r} at position {pos - 1}: {text!r}")
            sign = -1 if m.group("op") == "-" else 1
            expecting_term = True
            continue
        expecting_term = False
        if m.group("num"):
            term = SymExpr.const(Fraction(m.group("num")))
        elif m.group("atom"):
            last = _parse_atom(m.group("atom"))
            factors.append(last)
        elif m.group("pow"):
            if not factors:
                raise ValueError(f"power without base in {text!r}")
            factors[-1] = factors[-1] ** int(m.group("pow")[1:])
    total = total + sign * flush()
    return total
