"""Regular/irregular dichotomy, Type I/II normal forms and Monsky invariants.

A trinomial of degree d is *irregular* when some coordinate point of P^2
has multiplicity r with 2r >= d on the curve.  Otherwise it is *regular*
and, after permuting variables and reordering terms, takes one of the forms

    Type I:   x^a1 y^a2 + y^b1 z^b2 + z^c1 x^c2      a1, b1, c1 > d/2
    Type II:  x^d + x^a1 y^a2 z^a3 + y^b z^c          a2, c > d/2

from which the integers (alpha, beta, nu, lambda) are read off.
"""
from __future__ import annotations

import enum
import itertools
import math
from fractions import Fraction
from dataclasses import dataclass
from typing import Union

from .errors import HypothesisNotMet, InternalInconsistency, Unclassifiable
from .poly import Trinomial


class Axis(enum.Enum):
    X = 0
    Y = 1
    Z = 2


@dataclass(frozen=True)
class TypeI:
    a1: int
    a2: int
    b1: int
    b2: int
    c1: int
    c2: int

    def params(self) -> tuple[int, ...]:
        return (self.a1, self.a2, self.b1, self.b2, self.c1, self.c2)

    def exponent_matrix(self):
        return ((self.a1, self.a2, 0), (0, self.b1, self.b2), (self.c2, 0, self.c1))


@dataclass(frozen=True)
class TypeII:
    a1: int
    a2: int
    a3: int
    b: int
    c: int

    def params(self) -> tuple[int, ...]:
        return (self.a1, self.a2, self.a3, self.b, self.c)

    def exponent_matrix(self):
        d = self.a1 + self.a2 + self.a3
        return ((d, 0, 0), (self.a1, self.a2, self.a3), (0, self.b, self.c))


@dataclass(frozen=True)
class RegularNormalForm:
    kind: Union[TypeI, TypeII]
    degree: int
    # new variable i is old variable permutation[i]
    permutation: tuple[int, int, int]
    # normal-form term j is input term monomial_order[j]
    monomial_order: tuple[int, int, int]

    @property
    def type_name(self) -> str:
        return "I" if isinstance(self.kind, TypeI) else "II"


@dataclass(frozen=True)
class Regular:
    normal_form: RegularNormalForm


@dataclass(frozen=True)
class Irregular:
    axis: Axis
    r: int
    degree: int

    @property
    def balanced(self) -> bool:
        """True when 2r = d (the strongly semistable case)."""
        return 2 * self.r == self.degree


Classification = Union[Regular, Irregular]


@dataclass(frozen=True)
class Invariants:
    d: int
    alpha: int
    beta: int
    nu: int
    lam: int

    @property
    def t(self) -> tuple[Fraction, Fraction, Fraction]:
        return tuple(Fraction(v, self.lam) for v in (self.alpha, self.beta, self.nu))

    @property
    def is_symmetric(self) -> bool:
        return self.alpha == self.beta == self.nu

    @property
    def a(self) -> int:
        return math.gcd(self.alpha, self.beta, self.nu, self.lam)

    @property
    def lam_h(self) -> int:
        return self.lam // self.a

    def reduce(self, n: int) -> "ReducedInvariants":
        return reduce(self, n)


@dataclass(frozen=True)
class ReducedInvariants:
    invariants: Invariants
    n: int
    a: int
    lam_h: int
    alpha1: int
    beta1: int
    nu1: int
    a_n: int
    lam_hn: int

    def residue_data(self, use_n_reduction: bool = True) -> tuple[int, int, int, int]:
        """Return (L, A, B, N) with t*n = (A, B, N)/L.

        With ``use_n_reduction`` L is lambda_{h,n}; otherwise L is lambda_h
        and (A, B, N) = n * (alpha1, beta1, nu1).
        """
        inv = self.invariants
        if use_n_reduction:
            return (
                self.lam_hn,
                inv.alpha * self.n // self.a_n,
                inv.beta * self.n // self.a_n,
                inv.nu * self.n // self.a_n,
            )
        return (self.lam_h, self.alpha1 * self.n, self.beta1 * self.n, self.nu1 * self.n)


def coordinate_multiplicity(t: Trinomial, axis: Axis) -> int:
    """Multiplicity of the curve at the coordinate point of ``axis``."""
    i = axis.value
    return min(m.degree() - m[i] for m in t.monomials)


def _match_type_ii(m1, m2, m3, d):
    if m1 != (d, 0, 0):
        return None
    if 2 * m2[1] <= d or m3[0] != 0 or 2 * m3[2] <= d:
        return None
    return TypeII(m2[0], m2[1], m2[2], m3[1], m3[2])


def _match_type_i(m1, m2, m3, d):
    if m1[2] != 0 or m2[0] != 0 or m3[1] != 0:
        return None
    if 2 * m1[0] <= d or 2 * m2[1] <= d or 2 * m3[2] <= d:
        return None
    return TypeI(m1[0], m1[1], m2[1], m2[2], m3[2], m3[0])


def normal_form(t: Trinomial) -> RegularNormalForm:
    """Canonical Type I/II form: Type II preferred, then smallest parameters."""
    d = t.degree
    found = {TypeII: [], TypeI: []}
    for perm in itertools.permutations(range(3)):
        permuted = [tuple(m[perm[i]] for i in range(3)) for m in t.monomials]
        for order in itertools.permutations(range(3)):
            m1, m2, m3 = (permuted[j] for j in order)
            for matcher, cls in ((_match_type_ii, TypeII), (_match_type_i, TypeI)):
                kind = matcher(m1, m2, m3, d)
                if kind is not None:
                    found[cls].append((kind.params(), perm, order, kind))
    for cls in (TypeII, TypeI):
        if found[cls]:
            _, perm, order, kind = min(found[cls], key=lambda c: (c[0], c[1], c[2]))
            return RegularNormalForm(kind, d, perm, order)
    raise Unclassifiable(
        f"{t} has no coordinate point of multiplicity >= d/2 and no Type I/II form "
        "(the input is probably reducible)"
    )


def classify(t: Trinomial) -> Classification:
    mults = [coordinate_multiplicity(t, ax) for ax in Axis]
    r = max(mults)
    if 2 * r >= t.degree:
        return Irregular(Axis(mults.index(r)), r, t.degree)
    return Regular(normal_form(t))


def _det3(m) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def invariants(nf: RegularNormalForm) -> Invariants:
    d = nf.degree
    k = nf.kind
    if isinstance(k, TypeI):
        alpha = k.a1 + k.b1 - d
        beta = k.a1 + k.c1 - d
        nu = k.b1 + k.c1 - d
        lam = k.a1 * k.b1 + k.a2 * k.c2 - k.b1 * k.c2
    else:
        alpha, beta, nu = k.a2, k.c, k.a2 + k.c - d
        lam = k.a2 * k.c - k.a3 * k.b

    if lam * d != abs(_det3(k.exponent_matrix())):
        raise InternalInconsistency(f"lambda*d != |det A| for {nf}")
    if min(alpha, beta, nu, lam) <= 0:
        raise InternalInconsistency(f"non-positive invariant for {nf}")
    if not (alpha < beta + nu and beta < alpha + nu and nu < alpha + beta):
        raise InternalInconsistency(f"triangle inequality fails for {nf}")
    if 2 * lam < alpha + beta + nu:
        raise InternalInconsistency(f"2*lambda < alpha+beta+nu for {nf}")
    return Invariants(d, alpha, beta, nu, lam)


def trinomial_invariants(t: Trinomial) -> Invariants:
    c = classify(t)
    if not isinstance(c, Regular):
        raise HypothesisNotMet(f"{t} is irregular; Monsky invariants are undefined")
    return invariants(c.normal_form)


def reduce(inv: Invariants, n: int) -> ReducedInvariants:
    if n < 1:
        raise ValueError("n must be >= 1")
    a = inv.a
    a_n = math.gcd(inv.alpha * n, inv.beta * n, inv.nu * n, inv.lam)
    return ReducedInvariants(
        invariants=inv,
        n=n,
        a=a,
        lam_h=inv.lam // a,
        alpha1=inv.alpha // a,
        beta1=inv.beta // a,
        nu1=inv.nu // a,
        a_n=a_n,
        lam_hn=inv.lam // a_n,
    )
