"""The congruence-class map Delta_{h,n} and its tables.

For a regular trinomial with invariants (alpha, beta, nu, lambda) and a unit
l modulo 2*lambda_h, Delta_{h,n}(l) is either the strongly semistable
sentinel or the pair (Td, Ds): Ds is the least s >= 0 for which the taxicab
inequality Td(l^s t n, u) < 1 has a solution u in L_odd, and Td is that
distance.  The value depends only on +-l modulo 2*lambda_h.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np
from sympy import totient
from sympy.ntheory import n_order

from .classify import Invariants, reduce
from .errors import NotCoprime
from .taxicab import DELTAS, residue_td, td_solution_direct


class Sentinel(enum.Enum):
    STRONGLY_SEMISTABLE = "strongly_semistable"

    def __repr__(self):
        return "STRONGLY_SEMISTABLE"


STRONGLY_SEMISTABLE = Sentinel.STRONGLY_SEMISTABLE


@dataclass(frozen=True)
class Finite:
    td: Fraction
    ds: int

    def __post_init__(self):
        if not 0 <= self.td < 1 or self.ds < 0:
            raise ValueError(f"invalid Delta value ({self.td}, {self.ds})")

    def __str__(self):
        return f"({self.td}, {self.ds})"


DeltaValue = Union[Sentinel, Finite]


@dataclass(frozen=True)
class DeltaRow:
    lo: int
    hi: int
    value: DeltaValue


@dataclass(frozen=True)
class DeltaTable:
    invariants: Invariants
    n: int
    modulus: int
    rows: tuple[DeltaRow, ...]

    def __getitem__(self, l: int) -> DeltaValue:
        l %= self.modulus
        for row in self.rows:
            if l in (row.lo, row.hi):
                return row.value
        raise KeyError(l)

    def as_dict(self) -> dict[int, DeltaValue]:
        return {row.lo: row.value for row in self.rows}


def multiplicative_order(l: int, m: int) -> int:
    """Least k >= 1 with l^k = 1 (mod m)."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(l, m) != 1:
        raise NotCoprime(f"{l} is not a unit modulo {m}")
    if m == 1:
        return 1
    return int(n_order(l % m, m))


def euler_phi(m: int) -> int:
    return int(totient(m))


def unit_classes(modulus: int) -> list[int]:
    """Representatives l in [1, modulus/2] of (Z/modulus)^* / {+-1}."""
    if modulus <= 2:
        return [1]
    return [l for l in range(1, modulus // 2 + 1) if math.gcd(l, modulus) == 1]


def _check_unit(inv: Invariants, l: int) -> int:
    m = 2 * inv.lam_h
    if l < 1:
        raise ValueError("class representative must be positive")
    if math.gcd(l, m) != 1:
        raise NotCoprime(f"l = {l} shares a factor with 2*lambda_h = {m}")
    return l % m


def delta(inv: Invariants, n: int, l: int, use_n_reduction: bool = True) -> DeltaValue:
    """Delta_{h,n}(l) by ascending probes s = 0, 1, ... < ord(l mod 2L)."""
    _check_unit(inv, l)
    L, A, B, N = reduce(inv, n).residue_data(use_n_reduction)
    m = 2 * L
    base = l % m
    one = 1 % m
    g, s = one, 0
    while True:
        total = residue_td(g, L, A, B, N)
        if total is not None:
            return Finite(Fraction(total, L), s)
        g = g * base % m
        s += 1
        if g == one:
            return STRONGLY_SEMISTABLE


def delta_direct(inv: Invariants, n: int, l: int) -> DeltaValue:
    """Reference implementation of :func:`delta` in exact rationals."""
    _check_unit(inv, l)
    order = multiplicative_order(l, 2 * inv.lam_h)
    for s in range(order):
        sol = td_solution_direct(inv, n, l, s)
        if sol is not None:
            return Finite(sol.td, s)
    return STRONGLY_SEMISTABLE


def hit_table(L: int, A: int, B: int, N: int) -> list[int]:
    """For each residue g mod 2L: L * Td(g t n) when < L, else -1."""
    m = 2 * L
    g = np.arange(m, dtype=np.int64)
    coeffs = [A % m, B % m, N % m]
    best = np.full(m, -1, dtype=np.int64)
    for delta_ in DELTAS:
        total = np.zeros(m, dtype=np.int64)
        for c, di in zip(coeffs, delta_):
            w = (g * c - di * L) % m
            total += np.where(w < L, w, m - w)
        best = np.where((best < 0) & (total < L), total, best)
    return best.tolist()


def delta_table(inv: Invariants, n: int) -> DeltaTable:
    """Delta_{h,n} on every class of (Z/2 lambda_h)^* / {+-1}.

    Residues mod 2L are scored once in a vectorized pass; each class then
    walks its cyclic orbit.  An orbit that closes without a hit proves every
    element of that cyclic subgroup strongly semistable, which is cached.
    """
    modulus = 2 * inv.lam_h
    L, A, B, N = reduce(inv, n).residue_data(True)
    m = 2 * L
    hits = hit_table(L, A, B, N)
    one = 1 % m
    cache: dict[int, DeltaValue] = {}

    def walk(r: int) -> DeltaValue:
        g, s = one, 0
        orbit = []
        while True:
            if hits[g] >= 0:
                return Finite(Fraction(hits[g], L), s)
            orbit.append(g)
            g = g * r % m
            s += 1
            if g == one:
                for e in orbit:
                    cache[e] = STRONGLY_SEMISTABLE
                return STRONGLY_SEMISTABLE

    rows = []
    for l in unit_classes(modulus):
        r = l % m
        if r not in cache:
            cache[r] = walk(r)
        rows.append(DeltaRow(l, modulus - l, cache[r]))
    return DeltaTable(inv, n, modulus, tuple(rows))
