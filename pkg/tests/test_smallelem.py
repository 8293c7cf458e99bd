"""Small-element witnesses and integer relation search."""

import itertools
from fractions import Fraction

import pytest

from transgroup import elements as E
from transgroup import groups as G
from transgroup import smallelem as SE
from transgroup.errors import SearchExhausted

from conftest import SMALL_LOG23_30, contains_digits


def _abs_hi(x, bits=256):
    return x.eval_box(bits).abs_interval(bits + 8).hi_fraction()


def test_small_element_log23():
    g = G.log_group([2, 3])
    x = SE.small_element(g, Fraction(2, 100))
    assert _abs_hi(x) < Fraction(2, 100)
    m = G.member(g, x)
    assert m.is_yes()
    # the minimal-height witness comes from the convergent 19/12
    assert sorted(abs(c) for c in m.coeffs) == [12, 19]
    box = x.eval_box(128)
    assert contains_digits(box.abs_interval(136), SMALL_LOG23_30)


def test_small_element_truncated_log_family():
    # generators log(1 + 1/n); the n = 100 generator is already tiny
    g = G.log_group([Fraction(101, 100), Fraction(3, 2)])
    x = SE.small_element(g, Fraction(1, 100))
    assert _abs_hi(x) < Fraction(1, 100)
    assert G.member(g, x).is_yes()


def test_small_element_eps_ladder():
    for grp in (G.log_group([2, 3]), G.exp_group([1, Fraction(1, 2)])):
        for k in range(1, 7):
            eps = Fraction(1, 10**k)
            x = SE.small_element(grp, eps, max_bits=1024)
            assert _abs_hi(x) < eps
            assert x.is_zero().is_false()
            assert G.member(grp, x).is_yes()


def test_small_element_exhausts_on_discrete():
    g = G.pair_group("Tsx", binding="e")
    with pytest.raises(SearchExhausted):
        SE.small_element(g, Fraction(1, 10), max_bits=256)


def test_small_element_replay_invariant():
    g = G.exp_group([Fraction(1, 3), Fraction(2, 3), 1])
    x = SE.small_element(g, Fraction(1, 50))
    m = G.member(g, x)
    assert m.is_yes()
    assert G.combine(g, m.coeffs) == x


def test_relation_search_finds_log_relation():
    vals = [E.log_element(2), E.log_element(3), E.log_element(6)]
    rep = SE.relation_search(vals, 10, 128)
    assert rep.relation is not None
    assert rep.certified
    m = rep.relation
    # the relation must kill the canonical element exactly
    total = E.zero_element()
    for mj, v in zip(m, vals):
        total = total + v.scale(mj)
    assert total.is_zero().is_true()
    # normalized direction: (1, 1, -1) up to sign
    assert sorted(map(abs, m)) == [1, 1, 1]


def test_relation_search_none_for_e_pi():
    rep = SE.relation_search([E.exp_element(1), E.pi_element()], 10**6, 512)
    assert rep.relation is None
    assert rep.height >= 10**6


def test_relation_search_single_value():
    rep = SE.relation_search([E.t_element("Trel")], 100, 128)
    assert rep.relation is None


def test_relation_search_zero_value_is_certified():
    vals = [E.log_element(4) - E.log_element(2, 2), E.pi_element()]
    rep = SE.relation_search(vals, 10, 128)
    assert rep.relation == (1, 0)
    assert rep.certified


def test_relation_search_agrees_with_enumeration():
    cases = [
        [E.log_element(2), E.log_element(8)],              # relation (3, -1)
        [E.log_element(2), E.log_element(3)],              # none
        [E.pi_element(2), E.pi_element(3), E.pi_element(5)],
        [E.exp_element(1), E.exp_element(2)],              # none
    ]
    H = 15
    for vals in cases:
        rep = SE.relation_search(vals, H, 192)
        brute = None
        k = len(vals)
        for m in itertools.product(range(-H, H + 1), repeat=k):
            if not any(m):
                continue
            total = E.zero_element()
            for mj, v in zip(m, vals):
                if mj:
                    total = total + v.scale(mj)
            if total.is_zero().is_true():
                brute = m
                break
        assert (rep.relation is not None and rep.certified) == (brute is not None)


def test_witnesses_shrink_with_eps():
    g = G.log_group([2, 3])
    sizes = []
    for k in (1, 3, 5):
        x = SE.small_element(g, Fraction(1, 10**k))
        sizes.append(_abs_hi(x))
    assert sizes[0] > sizes[1] > sizes[2]
