"""Exact Hilbert-Kunz multiplicities e_HK(R, (x^n, y^n, z^n)).

Regular trinomial, p = +-l (mod 2 lambda_h), Delta_{h,n}(l) = (t, s):

    e_HK = 3 d n^2 / 4 + c^2 / (4 d p^(2s)),    c = lambda (1 - t)

and e_HK = 3 d n^2 / 4 when Delta is strongly semistable.  Irregular trinomial
with a coordinate point of multiplicity r:

    e_HK = 3 d n^2 / 4 + (2r - d)^2 n^2 / (4d)      for every p.

Formulas are computed once per class and evaluated per prime, so p^(2s) is
the only big-integer work.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import NamedTuple, Optional

from sympy import isprime

from .classify import Irregular, classify, invariants
from .delta import Finite, delta
from .errors import InternalInconsistency, NotCoprime, NotPrime, PBelowN, UsageError
from .poly import Trinomial


class HKSymbol(NamedTuple):
    """``base + coefficient / p**p_power`` (coefficient 0 means no p-term)."""

    base: Fraction
    coefficient: Fraction
    p_power: int

    def evaluate(self, p: int) -> Fraction:
        return self.base + self.coefficient / Fraction(p) ** self.p_power

    def __str__(self):
        if self.coefficient == 0:
            return str(self.base)
        if self.p_power == 0:
            return str(self.base + self.coefficient)
        return f"{self.base} + {self.coefficient}/p^{self.p_power}"


def hk_symbol(base, coefficient, p_power) -> HKSymbol:
    coefficient = Fraction(coefficient)
    return HKSymbol(Fraction(base), coefficient, p_power if coefficient else 0)


@dataclass(frozen=True)
class HKFormula:
    d: int
    n: int
    base: Fraction
    c: int = 0
    s: Optional[int] = None  # None stands for s = infinity
    irregular_term: Optional[Fraction] = None

    @property
    def is_irregular(self) -> bool:
        return self.irregular_term is not None

    def symbol(self) -> HKSymbol:
        if self.irregular_term is not None:
            return hk_symbol(self.base + self.irregular_term, 0, 0)
        if self.s is None:
            return hk_symbol(self.base, 0, 0)
        return hk_symbol(self.base, Fraction(self.c**2, 4 * self.d), 2 * self.s)

    def evaluate(self, p: int) -> Fraction:
        return self.symbol().evaluate(p)

    def __str__(self):
        if self.irregular_term is not None:
            return f"{self.base} + {self.irregular_term}"
        if self.s is None:
            return str(self.base)
        return f"{self.base} + {self.c}^2/({4 * self.d}*p^{2 * self.s})"


@dataclass(frozen=True)
class HKValue:
    value: Fraction
    decimal: str


def base_term(d: int, n: int) -> Fraction:
    return Fraction(3 * d * n * n, 4)


def irregular_term(d: int, r: int, n: int) -> Fraction:
    return Fraction((2 * r - d) ** 2 * n * n, 4 * d)


def decimal_string(x: Fraction, digits: int = 12) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def formula_from_delta(inv, n: int, value) -> HKFormula:
    base = base_term(inv.d, n)
    if not isinstance(value, Finite):
        return HKFormula(inv.d, n, base)
    c = inv.lam * (1 - value.td)
    if c.denominator != 1 or not 0 < c <= inv.lam:
        raise InternalInconsistency(f"lambda*(1-t) = {c} is not an integer in (0, lambda]")
    return HKFormula(inv.d, n, base, int(c), value.ds)


def ehk_formula(t: Trinomial, n: int, l: Optional[int] = None) -> HKFormula:
    if n < 1:
        raise ValueError("n must be >= 1")
    cls = classify(t)
    if isinstance(cls, Irregular):
        return HKFormula(t.degree, n, base_term(t.degree, n),
                         irregular_term=irregular_term(t.degree, cls.r, n))
    if l is None:
        raise UsageError("a congruence class l is required for a regular trinomial")
    inv = invariants(cls.normal_form)
    return formula_from_delta(inv, n, delta(inv, n, l))


def check_prime(p: int) -> None:
    # sympy.isprime: deterministic below 2**64, strong BPSW above
    if p < 2 or not isprime(p):
        raise NotPrime(f"{p} is not prime")


def ehk_value(t: Trinomial, n: int, p: int) -> HKValue:
    check_prime(p)
    if p < n:
        raise PBelowN(f"p = {p} < n = {n}")
    cls = classify(t)
    if isinstance(cls, Irregular):
        formula = ehk_formula(t, n)
    else:
        modulus = 2 * invariants(cls.normal_form).lam_h
        if math.gcd(p, modulus) != 1:
            raise NotCoprime(f"p = {p} divides 2*lambda_h = {modulus}")
        formula = ehk_formula(t, n, p % modulus)
    value = formula.evaluate(p)
    return HKValue(value, decimal_string(value))
