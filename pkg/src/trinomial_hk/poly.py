"""Homogeneous trinomials in x, y, z: parsing, validation and formatting.

Only exponent vectors matter downstream.  Integer coefficients are accepted
and dropped (over an algebraically closed field a trinomial with invertible
exponent matrix can be rescaled to unit coefficients); the result records
that it happened in ``coefficients_dropped``.

    >>> t = parse_trinomial("x^3*y + y^3*z + z^3*x")
    >>> t.exponents
    ((3, 1, 0), (0, 3, 1), (1, 0, 3))
    >>> format_trinomial(t)
    'x^3*y + y^3*z + z^3*x'
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import (
    DuplicateMonomial,
    NotHomogeneous,
    NotTrinomial,
    TrinomialSyntaxError,
    ZeroCoefficient,
)

VARIABLES = "xyz"
DIGITS = "0123456789"
MAX_DEGREE = 10**6


class Monomial(NamedTuple):
    ex: int
    ey: int
    ez: int

    def degree(self) -> int:
        return self.ex + self.ey + self.ez

    def __str__(self) -> str:
        factors = []
        for var, e in zip(VARIABLES, self):
            if e == 1:
                factors.append(var)
            elif e > 1:
                factors.append(f"{var}^{e}")
        return "*".join(factors) or "1"


@dataclass(frozen=True)
class Trinomial:
    monomials: tuple[Monomial, Monomial, Monomial]
    degree: int
    coefficients_dropped: bool = field(default=False, compare=False)

    def __post_init__(self):
        if len(self.monomials) != 3:
            raise NotTrinomial(f"expected 3 terms, got {len(self.monomials)}")
        if len(set(self.monomials)) != 3:
            raise DuplicateMonomial("the three monomials must be pairwise distinct")
        degrees = {m.degree() for m in self.monomials}
        if len(degrees) != 1:
            raise NotHomogeneous(f"terms have unequal degrees {sorted(degrees)}")
        if degrees != {self.degree}:
            raise NotHomogeneous(f"declared degree {self.degree} does not match terms")
        if not 2 <= self.degree <= MAX_DEGREE:
            raise TrinomialSyntaxError(f"degree {self.degree} outside [2, {MAX_DEGREE}]", 0)

    @classmethod
    def from_exponents(cls, exponents, coefficients_dropped=False) -> "Trinomial":
        monos = tuple(Monomial(*map(int, e)) for e in exponents)
        if len(monos) != 3:
            raise NotTrinomial(f"expected 3 terms, got {len(monos)}")
        if any(x < 0 for m in monos for x in m):
            raise TrinomialSyntaxError("negative exponent", 0)
        return cls(monos, monos[0].degree(), coefficients_dropped)

    @property
    def exponents(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(tuple(m) for m in self.monomials)

    def __str__(self) -> str:
        return format_trinomial(self)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def offset(self, pos=None) -> int:
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8"))

    def error(self, message, pos=None):
        raise TrinomialSyntaxError(message, self.offset(pos))

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self, signed=False, max_digits=None) -> int:
        self.skip_ws()
        start = self.pos
        if signed and self.peek() == "-":
            self.pos += 1
            self.skip_ws()
        digits_start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in DIGITS:
            self.pos += 1
        if self.pos == digits_start:
            self.error("expected an integer", start)
        digits = self.text[digits_start:self.pos]
        if max_digits is not None and len(digits) > max_digits:
            self.error("integer too large", start)
        value = int(digits)
        return -value if self.text[start] == "-" else value

    def factor(self, exps):
        ch = self.peek()
        if ch not in VARIABLES or not ch:
            self.error("expected a variable x, y or z")
        self.pos += 1
        e = 1
        if self.peek() == "^":
            self.pos += 1
            e = self.integer(max_digits=7)
        exps[VARIABLES.index(ch)] += e

    def term(self) -> tuple[Monomial, bool]:
        exps = [0, 0, 0]
        dropped = False
        ch = self.peek()
        if ch and ch in DIGITS + "-":
            start = self.pos
            coeff = self.integer(signed=True)
            if coeff == 0:
                raise ZeroCoefficient(f"zero coefficient at byte {self.offset(start)}")
            dropped = coeff != 1
            self.expect("*")
        self.factor(exps)
        while self.peek() == "*":
            self.pos += 1
            self.factor(exps)
        return Monomial(*exps), dropped

    def parse(self) -> list[tuple[Monomial, bool]]:
        terms = [self.term()]
        while self.peek() == "+":
            self.pos += 1
            terms.append(self.term())
        if self.peek():
            self.error(f"unexpected character {self.peek()!r}")
        return terms


def parse_trinomial(text: str) -> Trinomial:
    """Parse ``term + term + term``; see the README for the grammar."""
    terms = _Parser(text).parse()
    if len(terms) != 3:
        raise NotTrinomial(f"expected 3 terms, got {len(terms)}")
    monos = tuple(m for m, _ in terms)
    if any(m.degree() > MAX_DEGREE for m in monos):
        raise TrinomialSyntaxError(f"degree exceeds {MAX_DEGREE}", 0)
    return Trinomial(monos, monos[0].degree(), any(d for _, d in terms))


def parse_exponent_form(text: str) -> Trinomial:
    """Parse the compact form ``"a,b,c;d,e,f;g,h,i"``."""
    groups = text.strip().split(";")
    if len(groups) != 3:
        raise NotTrinomial(f"expected 3 exponent triples, got {len(groups)}")
    exponents = []
    pos = 0
    for group in groups:
        parts = group.split(",")
        if len(parts) != 3:
            raise TrinomialSyntaxError("each exponent group needs three integers", pos)
        try:
            triple = tuple(int(p) for p in parts)
        except ValueError:
            raise TrinomialSyntaxError("non-integer exponent", pos) from None
        if any(e < 0 or e > MAX_DEGREE for e in triple):
            raise TrinomialSyntaxError("exponent out of range", pos)
        exponents.append(triple)
        pos += len(group.encode("utf-8")) + 1
    return Trinomial.from_exponents(exponents)


def parse_any(text: str) -> Trinomial:
    if any(c in text for c in ",;") and not any(c in text for c in VARIABLES):
        return parse_exponent_form(text)
    return parse_trinomial(text)


def format_trinomial(t: Trinomial) -> str:
    return " + ".join(str(m) for m in t.monomials)
