"""Seeded random trinomials shared by the property and acceptance tests."""
from __future__ import annotations

import random

from trinomial_hk.classify import Irregular, classify, invariants
from trinomial_hk.errors import DomainError
from trinomial_hk.poly import Trinomial


def _scramble(rng: random.Random, exps):
    perm = rng.sample(range(3), 3)
    terms = [tuple(e[perm[i]] for i in range(3)) for e in exps]
    rng.shuffle(terms)
    return terms


def _type_i(rng, d):
    a1, b1, c1 = (rng.randint(1, d) for _ in range(3))
    return [(a1, d - a1, 0), (0, b1, d - b1), (d - c1, 0, c1)]


def _type_ii(rng, d):
    a2 = rng.randint(1, d - 1)
    a1 = rng.randint(0, d - a2)
    b = rng.randint(1, d)
    return [(d, 0, 0), (a1, a2, d - a1 - a2), (0, b, d - b)]


def regular(seed: int, count: int, d_max: int = 30, d_min: int = 3):
    """``count`` regular trinomials with random type, variable order and term order."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(d_min, d_max)
        exps = (_type_i if rng.random() < 0.5 else _type_ii)(rng, d)
        try:
            t = Trinomial.from_exponents(_scramble(rng, exps))
            cls = classify(t)
        except DomainError:
            continue
        if isinstance(cls, Irregular):
            continue
        out.append((t, invariants(cls.normal_form)))
    return out


def irregular(seed: int, count: int, d_max: int = 12):
    """``count`` irregular trinomials: every term has x-degree <= d - r, r >= d/2."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(2, d_max)
        r = rng.randint((d + 1) // 2, d - 1)
        exps = set()
        first = d - r
        ey = rng.randint(0, r)
        exps.add((first, ey, r - ey))
        while len(exps) < 3:
            ex = rng.randint(0, d - r)
            ey = rng.randint(0, d - ex)
            exps.add((ex, ey, d - ex - ey))
        try:
            t = Trinomial.from_exponents(_scramble(rng, sorted(exps)))
        except DomainError:
            continue
        if isinstance(classify(t), Irregular):
            out.append(t)
    return out


def symmetric(d: int, a: int) -> Trinomial:
    return Trinomial.from_exponents([(a, d - a, 0), (0, a, d - a), (d - a, 0, a)])


def klein(d: int) -> Trinomial:
    return symmetric(d, d - 1)


def fermat(d: int) -> Trinomial:
    return Trinomial.from_exponents([(d, 0, 0), (0, d, 0), (0, 0, d)])
