from fractions import Fraction as F

import pytest

from corpus import fermat, klein, symmetric
from trinomial_hk.classify import Irregular, classify, invariants, trinomial_invariants
from trinomial_hk.closed_forms import (
    KNOWN_DISCREPANCIES, Status, crosscheck, fermat_quartic_ehk, klein_delta, klein_fermat_ehk,
    klein_hn_gap, symmetric_delta_class1, symmetric_delta_lambda_pm2,
)
from trinomial_hk.delta import STRONGLY_SEMISTABLE, Finite, delta
from trinomial_hk.errors import HypothesisNotMet, NotSymmetric
from trinomial_hk.hilbert_kunz import hk_symbol
from trinomial_hk.poly import parse_trinomial

KLEIN4 = trinomial_invariants(klein(4))


def test_symmetric_class1_examples():
    assert symmetric_delta_class1(KLEIN4, 1) is STRONGLY_SEMISTABLE
    assert symmetric_delta_class1(KLEIN4, 3) == Finite(F(3, 7), 0)
    # alpha n / lambda = 2 for the Fermat quartic with n = 8
    assert symmetric_delta_class1(trinomial_invariants(fermat(4)), 8) is STRONGLY_SEMISTABLE


def test_not_symmetric():
    inv = trinomial_invariants(parse_trinomial("x^5+x^2*y^3+y*z^4"))
    assert not inv.is_symmetric
    with pytest.raises(NotSymmetric):
        symmetric_delta_class1(inv, 1)


def test_lambda_pm2_examples():
    assert symmetric_delta_lambda_pm2(KLEIN4, 1) == Finite(F(3, 7), 2)
    # n = 3: distance 1/7 < 1/3
    assert symmetric_delta_lambda_pm2(KLEIN4, 3) == Finite(F(3, 7), 0)
    with pytest.raises(HypothesisNotMet):
        symmetric_delta_lambda_pm2(trinomial_invariants(klein(5)), 1)


def test_lambda_pm2_needs_even_shift():
    # d even, lambda_h = 7 odd, but alpha/a = 1: the interval formula is wrong here
    inv = trinomial_invariants(symmetric(8, 2))
    assert (inv.lam_h, inv.alpha // inv.a) == (7, 1)
    with pytest.raises(HypothesisNotMet):
        symmetric_delta_lambda_pm2(inv, 1)
    assert delta(inv, 1, 5) == Finite(F(6, 7), 1)


def test_klein_delta_examples():
    assert klein_delta(4) == {5: Finite(F(3, 7), 2)}
    assert klein_delta(5) == {11: Finite(F(6, 13), 3)}
    assert klein_delta(7) == {29: Finite(F(30, 31), 1)}
    assert klein_delta(3) == {1: STRONGLY_SEMISTABLE}


def test_klein_delta_agrees_with_engine():
    for d in range(3, 65):
        inv = trinomial_invariants(klein(d))
        for l, value in klein_delta(d).items():
            assert delta(inv, 1, l) == value, d


def test_klein_fermat_ehk_examples():
    e4 = klein_fermat_ehk(4)
    assert e4["klein-d4-ehk-class+-(d-1)"] == (3, hk_symbol(3, 1, 2))
    assert e4["klein-d4-ehk-printed-lambda+-2"] == (5, hk_symbol(3, 7, 4))
    e5 = klein_fermat_ehk(5)
    assert e5["klein-d5-ehk-class-lambda+-(2d-2)"] == (5, hk_symbol(F(15, 4), F(49, 20), 2))


def test_fermat_quartic_and_gaps():
    assert fermat_quartic_ehk(7) == hk_symbol(3, 0, 0)
    assert fermat_quartic_ehk(5) == hk_symbol(3, 1, 2)
    assert klein_hn_gap(4) == (5, 2, 2)
    assert klein_hn_gap(5) == (11, 3, F(7, 2))


def _statuses(t, n=1):
    return {o.case_id: o.status for o in crosscheck(t, n)}


def test_crosscheck_fermat_quartic_all_match():
    st = _statuses(fermat(4))
    assert st and set(st.values()) == {Status.MATCH}
    assert "fermat-quartic-gap-class+-3" in st


def test_crosscheck_klein_quartic():
    st = _statuses(klein(4))
    bad = {k: v for k, v in st.items() if v is not Status.MATCH}
    assert bad == {"klein-d4-ehk-printed-lambda+-2": Status.KNOWN_DISCREPANCY}


def test_crosscheck_klein5_only_printed_ehk_differs():
    # the Delta and gap values match; the printed e_HK squares 49/4 once too often
    st = _statuses(klein(5))
    assert st["klein-d5-delta-lambda+-2"] is Status.MATCH
    assert st["klein-d5-hn-gap-lambda+-2"] is Status.MATCH
    bad = {k for k, v in st.items() if v is not Status.MATCH}
    assert bad == {"klein-d5-ehk-printed-lambda+-2"}


def test_symmetric_sweep():
    for d in range(4, 41):
        for a in range(1, d + 1):
            t = symmetric(d, a)
            if isinstance(classify(t), Irregular):
                continue
            for n in (1, 2, 3):
                for o in crosscheck(t, n):
                    assert o.status is Status.MATCH or o.case_id in KNOWN_DISCREPANCIES, (d, a, n, o)


def test_irregular_crosscheck():
    out = crosscheck(parse_trinomial("x^4+x^3*y+y^3*z"), 2)
    assert [o.status for o in out] == [Status.MATCH]
