"""Taxicab distance to the odd-sum lattice.

L_odd is the set of integer triples with odd coordinate sum.  For a rational
triple q the quantity of interest is Td(q) = min_u sum_i |q_i - u_i| over
u in L_odd, and whether it is < 1 (in which case the minimizer is unique).

Two routes compute Td(l^s * t * n) for t = (alpha, beta, nu)/lambda:

* :func:`td_solution_direct` works with exact rationals and big powers l^s;
  it is the reference.
* :func:`td_solution_residue` reduces everything modulo 2L (L = lambda_{h,n}
  or lambda_h), maps the triple to a residue point for each parity class
  delta of L_odd and tests membership in the union of the eight boxes T_ijk.
  No big integers are involved, so this is the production path.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .classify import Invariants, ReducedInvariants

# parity classes of L_odd
DELTAS = ((1, 1, 1), (1, 0, 0), (0, 1, 0), (0, 0, 1))


class OddLatticePoint(NamedTuple):
    u1: int
    u2: int
    u3: int


@dataclass(frozen=True)
class TdSolution:
    u: OddLatticePoint
    td: Fraction


class ResiduePoint(NamedTuple):
    w1: int
    w2: int
    w3: int


def _round_half_up(q: Fraction) -> int:
    return (2 * q.numerator + q.denominator) // (2 * q.denominator)


def nearest_odd_sum(q: Sequence) -> tuple[OddLatticePoint, Fraction]:
    """Closest point of L_odd to ``q`` in the L1 norm, and the distance.

    Coordinates are rounded to the nearest integer (halves round up).  If the
    rounded point has even sum, the single coordinate whose move to its
    second-nearest integer is cheapest is moved; ties go to the lowest index,
    and an integral coordinate moves up.
    """
    q = [Fraction(x) for x in q]
    u = [_round_half_up(x) for x in q]
    if sum(u) % 2 == 0:
        best = None
        for i, (x, r) in enumerate(zip(q, u)):
            alt = r - 1 if x < r else r + 1
            cost = abs(x - alt) - abs(x - r)
            if best is None or cost < best[0]:
                best = (cost, i, alt)
        u[best[1]] = best[2]
    return OddLatticePoint(*u), sum(abs(x - r) for x, r in zip(q, u))


def scaled_triple(inv: Invariants, n: int, l: int, s: int) -> tuple[Fraction, ...]:
    """The exact triple l^s * t * n."""
    scale = l**s * n
    return tuple(Fraction(scale * v, inv.lam) for v in (inv.alpha, inv.beta, inv.nu))


def td_solution_direct(inv: Invariants, n: int, l: int, s: int) -> Optional[TdSolution]:
    if n < 1 or l < 1 or s < 0:
        raise ValueError("need n >= 1, l >= 1, s >= 0")
    u, dist = nearest_odd_sum(scaled_triple(inv, n, l, s))
    return TdSolution(u, dist) if dist < 1 else None


def residue_point(A: int, B: int, N: int, L: int, g: int, delta) -> ResiduePoint:
    """Representative in [0, 2L)^3 of L*(g*t*n - delta) for t*n = (A, B, N)/L."""
    m = 2 * L
    return ResiduePoint(
        (g * A - delta[0] * L) % m,
        (g * B - delta[1] * L) % m,
        (g * N - delta[2] * L) % m,
    )


def box_distance(w: ResiduePoint, L: int) -> int:
    """L * Td for the box T_ijk holding ``w`` (i = 1 iff w_1 >= L, etc.).

    ``w`` lies in S_h exactly when the returned value is < L.
    """
    return sum(x if x < L else 2 * L - x for x in w)


def residue_td(g: int, L: int, A: int, B: int, N: int) -> Optional[int]:
    """L * Td(g * t * n) if the taxicab inequality is solvable, else None.

    ``g`` is any integer congruent to l^s modulo 2L.
    """
    m = 2 * L
    x = (g * A % m, g * B % m, g * N % m)
    for d1, d2, d3 in DELTAS:
        total = 0
        for xi, di in ((x[0], d1), (x[1], d2), (x[2], d3)):
            w = (xi - di * L) % m
            total += w if w < L else m - w
        if total < L:
            return total
    return None


def td_solution_residue(
    red: ReducedInvariants, l: int, s: int, use_n_reduction: bool = True
) -> Optional[Fraction]:
    """Td(l^s * t * n) via residues mod 2L, or None when it is >= 1."""
    if l < 1 or s < 0:
        raise ValueError("need l >= 1, s >= 0")
    L, A, B, N = red.residue_data(use_n_reduction)
    g = pow(l, s, 2 * L)
    total = residue_td(g, L, A, B, N)
    return None if total is None else Fraction(total, L)
