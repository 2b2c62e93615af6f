"""Parser/renderer for the ASCII sum notation.

    sum     := ("S"|"R") "{" factors ";" exp "}"
    factors := factor ("," factor)* | ""
    factor  := ["~"] INT ["^" INT]        ~ = bar, ^ = repetition
    exp     := ["~"] INT                  ~ = bar over q
    mrv     := "MRV(" sint ("," sint)* ")"
    sint    := ["-"] INT                  negative = barred

Whitespace between tokens is ignored.
"""

from __future__ import annotations

from itertools import groupby

from .sums import HarmonicFactor, MRVIndex, SumSpec


class SpecParseError(ValueError):
    def __init__(self, text: str, pos: int, expected: set[str] | list[str], message: str = ""):
        self.text = text
        self.pos = pos
        self.expected = sorted(set(expected))
        got = repr(text[pos]) if pos < len(text) else "end of input"
        msg = message or f"expected one of {', '.join(self.expected)} at position {pos}, got {got}"
        super().__init__(msg)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, literal: str):
        self._skip()
        if not self.text.startswith(literal, self.pos):
            raise SpecParseError(self.text, self.pos, [repr(literal)])
        self.pos += len(literal)

    def accept(self, literal: str) -> bool:
        self._skip()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def integer(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise SpecParseError(self.text, start, ["INT"])
        return int(self.text[start : self.pos])

    def end(self):
        self._skip()
        if self.pos != len(self.text):
            raise SpecParseError(self.text, self.pos, ["end of input"])

    # grammar rules

    def spec(self):
        self._skip()
        if self.text.startswith("MRV", self.pos):
            return self.mrv()
        head = self.peek()
        if head in ("S", "R"):
            return self.sum()
        raise SpecParseError(self.text, self.pos, ["'S'", "'R'", "'MRV('"])

    def sum(self):
        base = "int" if self.peek() == "S" else "half"
        self.pos += 1
        self.expect("{")
        factors: list[HarmonicFactor] = []
        if self.peek() != ";":
            factors.extend(self.factor())
            while self.accept(","):
                factors.extend(self.factor())
        self.expect(";")
        bar = self.accept("~")
        q_pos = self.pos
        q = self.integer()
        self.expect("}")
        self.end()
        if q < 2:
            raise SpecParseError(self.text, q_pos, ["INT >= 2"], f"q must be >= 2 at position {q_pos}")
        return SumSpec(tuple(factors), q, base, bar)

    def factor(self) -> list[HarmonicFactor]:
        if self.peek() not in ("~",) and not self.peek().isdigit():
            raise SpecParseError(self.text, self.pos, ["'~'", "INT"])
        bar = self.accept("~")
        p_pos = self.pos
        p = self.integer()
        if p < 1:
            raise SpecParseError(self.text, p_pos, ["INT >= 1"], f"harmonic order must be >= 1 at position {p_pos}")
        rep = 1
        if self.accept("^"):
            rep = self.integer()
        return [HarmonicFactor(p, bar)] * rep

    def mrv(self) -> MRVIndex:
        self.expect("MRV(")
        ks = [self.sint()]
        while self.accept(","):
            ks.append(self.sint())
        self.expect(")")
        self.end()
        return MRVIndex(tuple(ks))

    def sint(self) -> int:
        neg = self.accept("-")
        k_pos = self.pos
        k = self.integer()
        if k == 0:
            raise SpecParseError(self.text, k_pos, ["nonzero INT"], f"index entries must be nonzero at position {k_pos}")
        return -k if neg else k


def parse_spec(text: str) -> SumSpec | MRVIndex:
    """Parse a sum or MRV specification.  Raises :class:`SpecParseError`."""
    return _Parser(text).spec()


def render_spec(spec: SumSpec | MRVIndex) -> str:
    """Inverse of :func:`parse_spec` (repeated factors are folded into powers)."""
    if isinstance(spec, MRVIndex):
        return spec.render()
    parts = []
    for f, grp in groupby(spec.factors):
        n = len(list(grp))
        s = ("~" if f.alternating else "") + str(f.p)
        parts.append(s + (f"^{n}" if n > 1 else ""))
    head = "S" if spec.base == "int" else "R"
    return f"{head}{{{','.join(parts)};{'~' if spec.sign else ''}{spec.q}}}"
