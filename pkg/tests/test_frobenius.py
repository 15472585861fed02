from fractions import Fraction as F

import pytest
from sympy import primerange

from corpus import irregular, regular, symmetric
from trinomial_hk.classify import Irregular, classify, invariants
from trinomial_hk.delta import STRONGLY_SEMISTABLE, euler_phi, unit_classes
from trinomial_hk.errors import NotCoprime, NotPrime, OutOfTheoremRange
from trinomial_hk.frobenius import UnstableAt, report, report_by_class
from trinomial_hk.hilbert_kunz import ehk_formula
from trinomial_hk.poly import parse_trinomial

FERMAT = parse_trinomial("x^4+y^4+z^4")
KLEIN = parse_trinomial("x^3*y+y^3*z+z^3*x")
KLEIN5 = parse_trinomial("x^4*y+y^4*z+z^4*x")
IRR = parse_trinomial("x^4+x^3*y+y^3*z")


def test_report_examples():
    r = report(FERMAT, 1, 19)
    assert r.verdict == UnstableAt(1) and r.hn_gap == 2 and r.deg_L is None
    assert report(FERMAT, 1, 17).verdict is STRONGLY_SEMISTABLE
    r = report(KLEIN, 3, 29)
    assert (r.verdict, r.hn_gap, r.deg_L) == (UnstableAt(0), 2, -16)
    r = report(IRR, 1, 101)
    assert r.verdict == UnstableAt(0) and r.hn_gap == F(1, 4)
    assert not r.irregular_case.two_r_eq_d


def test_report_by_class_examples():
    r = report_by_class(KLEIN5, 1, 11)
    assert (r.verdict, r.hn_gap) == (UnstableAt(3), F(7, 2))
    r = report_by_class(KLEIN, 1, 5)
    assert (r.verdict, r.hn_gap) == (UnstableAt(2), 2)
    # |alpha/lambda - 1| = 5/7 >= 1/3
    assert report_by_class(KLEIN, 1, 1).verdict is STRONGLY_SEMISTABLE


def test_window_and_force():
    with pytest.raises(OutOfTheoremRange):
        report(FERMAT, 1, 7)
    with pytest.raises(OutOfTheoremRange):
        report(parse_trinomial("x^2*y+y^2*z+z^2*x"), 1, 101)
    r = report(FERMAT, 1, 7, force=True)
    assert r.conjectural and not r.preconditions_ok
    assert not report(FERMAT, 1, 17).conjectural
    with pytest.raises(NotPrime):
        report(FERMAT, 1, 21)
    with pytest.raises(NotCoprime):
        report(KLEIN, 1, 7, force=True)
    with pytest.raises(NotCoprime):
        report_by_class(KLEIN, 1, 7)


def test_balanced_irregular_is_strongly_semistable():
    t = parse_trinomial("x^2*y^2 + y^2*z^2 + z^2*x^2")
    r = report(t, 1, 101)
    assert r.strongly_semistable and r.irregular_case.two_r_eq_d and r.hn_gap is None


def test_dictionary_with_ehk():
    for t, inv in regular(12, 40, d_max=14, d_min=4):
        for n in (1, 2):
            for l in unit_classes(2 * inv.lam_h):
                r = report_by_class(t, n, l)
                f = ehk_formula(t, n, l)
                if f.s is None:
                    assert r.strongly_semistable and r.hn_gap is None
                else:
                    assert r.verdict == UnstableAt(f.s)
                    assert r.hn_gap == F(f.c, 2)
                    assert 0 < r.hn_gap <= F(inv.lam, 2)
                    assert r.verdict.s < euler_phi(2 * inv.lam_h)
                    if r.deg_L is not None:
                        assert f.s == 0 and l % (2 * inv.lam_h) in (1, 2 * inv.lam_h - 1)


def test_deg_L_periodicity():
    for d in range(4, 14):
        for a in range(1, d + 1):
            c = classify(symmetric(d, a))
            if isinstance(c, Irregular):
                continue
            inv = invariants(c.normal_form)
            t = symmetric(d, a)
            m = 2 * inv.lam_h
            for n in range(1, 6):
                r1, r2 = report_by_class(t, n, 1), report_by_class(t, n + m, 1)
                if r1.deg_L is not None:
                    assert r2.deg_L - r1.deg_L == -3 * inv.lam_h * d


def test_irregular_verdicts():
    for t in irregular(6, 40):
        if t.degree < 4:
            continue
        c = classify(t)
        p = next(iter(primerange(t.degree**2, t.degree**2 + 100)))
        r = report(t, 1, p)
        assert r.strongly_semistable == (2 * c.r == t.degree)
