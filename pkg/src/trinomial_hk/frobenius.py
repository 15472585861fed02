"""Frobenius semistability of the syzygy bundles V_n.

Reports either strong semistability or the least s for which F^{s*} V_n is
not semistable, with the Harder-Narasimhan slope gap mu(L) - mu(F^{s*} V_n).
For a regular trinomial with Delta_{h,n}(l) = (t, s) the gap is
lambda (1 - t) / 2.  When s = 0 and p = +-1 (mod 2 lambda_h) the degree of the
destabilizing line bundle is also reported, deg L_n = -3nd/2 + lambda(1-t)/2.
Irregular trinomials do not depend on p at all.

Statements are only proved for d >= 4 and p >= max(n, d^2); outside that
window the functions refuse unless ``force=True``, which marks the report
conjectural.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .classify import Irregular, classify, invariants
from .delta import STRONGLY_SEMISTABLE, DeltaValue, Finite, Sentinel, delta, euler_phi
from .errors import InternalInconsistency, NotCoprime, OutOfTheoremRange
from .hilbert_kunz import check_prime, formula_from_delta, irregular_term
from .poly import Trinomial


@dataclass(frozen=True)
class UnstableAt:
    s: int


Verdict = Union[Sentinel, UnstableAt]


@dataclass(frozen=True)
class IrregularCase:
    r: int
    two_r_eq_d: bool
    gap: Fraction


@dataclass(frozen=True)
class SemistabilityReport:
    d: int
    n: int
    verdict: Verdict
    hn_gap: Optional[Fraction] = None
    deg_L: Optional[Fraction] = None
    p: Optional[int] = None
    l: Optional[int] = None
    modulus: Optional[int] = None
    delta_value: Optional[DeltaValue] = None
    p_min: int = 0
    preconditions_ok: bool = True
    conjectural: bool = False
    irregular_case: Optional[IrregularCase] = None

    @property
    def strongly_semistable(self) -> bool:
        return self.verdict is STRONGLY_SEMISTABLE


def _irregular_report(cls: Irregular, n: int, **kw) -> SemistabilityReport:
    gap = irregular_term(cls.degree, cls.r, n)
    case = IrregularCase(cls.r, cls.balanced, gap)
    if cls.balanced:
        return SemistabilityReport(cls.degree, n, STRONGLY_SEMISTABLE, irregular_case=case, **kw)
    return SemistabilityReport(cls.degree, n, UnstableAt(0), hn_gap=gap, irregular_case=case, **kw)


def _regular_report(inv, n: int, l: int, **kw) -> SemistabilityReport:
    value = delta(inv, n, l)
    modulus = 2 * inv.lam_h
    if not isinstance(value, Finite):
        return SemistabilityReport(inv.d, n, STRONGLY_SEMISTABLE, l=l % modulus,
                                   modulus=modulus, delta_value=value, **kw)
    if value.ds >= euler_phi(modulus):
        raise InternalInconsistency(f"Ds = {value.ds} >= phi({modulus})")
    c = formula_from_delta(inv, n, value).c
    deg_L = None
    if value.ds == 0 and l % modulus in (1, modulus - 1):
        deg_L = Fraction(-3 * n * inv.d, 2) + Fraction(c, 2)
    return SemistabilityReport(inv.d, n, UnstableAt(value.ds), hn_gap=Fraction(c, 2),
                               deg_L=deg_L, l=l % modulus, modulus=modulus,
                               delta_value=value, **kw)


def report(t: Trinomial, n: int, p: int, force: bool = False) -> SemistabilityReport:
    check_prime(p)
    d = t.degree
    p_min = max(n, d * d)
    ok = d >= 4 and p >= p_min
    if not ok and not force:
        raise OutOfTheoremRange(f"need d >= 4 and p >= max(n, d^2) = {p_min}; got d = {d}, p = {p}")
    kw = dict(p=p, p_min=p_min, preconditions_ok=ok, conjectural=not ok)
    cls = classify(t)
    if isinstance(cls, Irregular):
        return _irregular_report(cls, n, **kw)
    inv = invariants(cls.normal_form)
    if math.gcd(p, 2 * inv.lam_h) != 1:
        raise NotCoprime(f"p = {p} divides 2*lambda_h = {2 * inv.lam_h}")
    return _regular_report(inv, n, p % (2 * inv.lam_h), **kw)


def report_by_class(t: Trinomial, n: int, l: int, force: bool = False) -> SemistabilityReport:
    """Report valid for every prime p = +-l (mod 2 lambda_h) with p >= max(n, d^2).

    Irregular trinomials get their (class-independent) report.
    """
    d = t.degree
    ok = d >= 4
    if not ok and not force:
        raise OutOfTheoremRange(f"need d >= 4, got d = {d}")
    kw = dict(p_min=max(n, d * d), preconditions_ok=ok, conjectural=not ok)
    cls = classify(t)
    if isinstance(cls, Irregular):
        return _irregular_report(cls, n, **kw)
    return _regular_report(invariants(cls.normal_form), n, l, **kw)
