import itertools
import math

import pytest
import sympy

from corpus import regular
from trinomial_hk.classify import (
    Axis, Irregular, Regular, TypeI, TypeII, classify, coordinate_multiplicity, invariants, reduce,
    trinomial_invariants,
)
from trinomial_hk.errors import HypothesisNotMet
from trinomial_hk.poly import Trinomial, parse_trinomial

FERMAT = parse_trinomial("x^4+y^4+z^4")
KLEIN = parse_trinomial("x^3*y+y^3*z+z^3*x")
IRR = parse_trinomial("x^4+x^3*y+y^3*z")
CORPUS = regular(11, 150)


@pytest.mark.parametrize("t,axis,r", [(FERMAT, Axis.X, 0), (KLEIN, Axis.X, 1), (IRR, Axis.Z, 3)])
def test_coordinate_multiplicity(t, axis, r):
    assert coordinate_multiplicity(t, axis) == r


def test_classify_examples():
    c = classify(FERMAT)
    assert isinstance(c, Regular) and isinstance(c.normal_form.kind, TypeII)
    assert c.normal_form.kind.params() == (0, 4, 0, 0, 4)
    c = classify(KLEIN)
    assert isinstance(c.normal_form.kind, TypeI)
    assert c.normal_form.kind.params() == (3, 1, 3, 1, 3, 1)
    c = classify(IRR)
    assert isinstance(c, Irregular) and (c.axis, c.r) == (Axis.Z, 3)


@pytest.mark.parametrize("text,expected", [
    ("x^4+y^4+z^4", (4, 4, 4, 4, 16)),
    ("x^3*y+y^3*z+z^3*x", (4, 2, 2, 2, 7)),
    ("x^4*y+y^4*z+z^4*x", (5, 3, 3, 3, 13)),
])
def test_invariants_examples(text, expected):
    inv = trinomial_invariants(parse_trinomial(text))
    assert (inv.d, inv.alpha, inv.beta, inv.nu, inv.lam) == expected


def test_reduce_examples():
    inv = trinomial_invariants(FERMAT)
    r1 = reduce(inv, 1)
    assert (r1.a, r1.lam_h, r1.alpha1, r1.beta1, r1.nu1, r1.lam_hn) == (4, 4, 1, 1, 1, 4)
    assert reduce(inv, 2).lam_hn == 2
    k = reduce(trinomial_invariants(KLEIN), 1)
    assert (k.a, k.lam_h) == (1, 7)


def test_irregular_has_no_invariants():
    with pytest.raises(HypothesisNotMet):
        trinomial_invariants(IRR)


def test_irregular_tie_break_prefers_x():
    # multiplicity 2 at X and at Y
    t = Trinomial.from_exponents([(2, 2, 0), (0, 2, 2), (2, 0, 2)])
    c = classify(t)
    assert isinstance(c, Irregular) and c.axis is Axis.X and c.r == 2 and c.balanced


def test_lemma_inequalities_and_det():
    for t, inv in CORPUS:
        a, b, v, lam = inv.alpha, inv.beta, inv.nu, inv.lam
        assert min(a, b, v, lam) > 0
        assert a < b + v and b < a + v and v < a + b
        assert 2 * lam >= a + b + v
        nf = classify(t).normal_form
        assert lam * inv.d == abs(sympy.Matrix(nf.kind.exponent_matrix()).det())


def test_normal_form_shape():
    for t, _ in CORPUS:
        nf = classify(t).normal_form
        d, k = nf.degree, nf.kind
        if isinstance(k, TypeI):
            assert 2 * min(k.a1, k.b1, k.c1) > d
            assert k.a1 + k.a2 == k.b1 + k.b2 == k.c1 + k.c2 == d
        else:
            assert 2 * k.a2 > d and 2 * k.c > d
            assert k.a1 + k.a2 + k.a3 == d and k.b + k.c == d


def test_invariants_are_permutation_independent():
    for t, inv in CORPUS[:40]:
        for perm in itertools.permutations(range(3)):
            for order in itertools.permutations(range(3)):
                exps = [tuple(t.exponents[o][perm[i]] for i in range(3)) for o in order]
                other = trinomial_invariants(Trinomial.from_exponents(exps))
                assert other.lam == inv.lam
                assert sorted((other.alpha, other.beta, other.nu)) == sorted((inv.alpha, inv.beta, inv.nu))
                assert classify(Trinomial.from_exponents(exps)).normal_form.kind == classify(t).normal_form.kind


def test_reduced_invariants():
    for _, inv in CORPUS:
        for n in range(1, 6):
            r = reduce(inv, n)
            assert r.a == math.gcd(inv.alpha, inv.beta, inv.nu, inv.lam)
            assert math.gcd(r.alpha1, r.beta1, r.nu1, r.lam_h) == 1
            assert r.a_n == math.gcd(inv.alpha * n, inv.beta * n, inv.nu * n, inv.lam)
            assert r.lam_h % r.lam_hn == 0


def test_branches_exclusive():
    for d in range(2, 9):
        monos = [(i, j, d - i - j) for i in range(d + 1) for j in range(d + 1 - i)]
        for combo in itertools.combinations(monos, 3):
            t = Trinomial.from_exponents(combo)
            max_r = max(coordinate_multiplicity(t, ax) for ax in Axis)
            try:
                c = classify(t)
            except Exception as e:
                assert 2 * max_r < d, e
                continue
            assert isinstance(c, Irregular) == (2 * max_r >= d)
