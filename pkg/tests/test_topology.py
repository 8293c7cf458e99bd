"""Span dimension, trichotomy classification, minimal norms."""

import itertools
from fractions import Fraction

import pytest

from transgroup import algebraic as alg
from transgroup import elements as E
from transgroup import groups as G
from transgroup import oracle as O
from transgroup import topology as T
from transgroup.errors import NotDiscrete
from transgroup.rationals import GaussianRational
from transgroup.verdicts import UnknownReason

from conftest import E_110, contains_digits


def test_span_dim_examples():
    assert T.span_dim(G.log_group([2, 3])) == 1
    assert T.span_dim(G.pair_group("Tspan")) == 2
    gi = G.exp_group([GaussianRational(0, 1), GaussianRational(0, 2)])
    assert T.span_dim(gi) == 2
    assert T.span_dim(G.group_make([])) == 0
    assert T.span_dim(G.group_make([E.zero_element()])) == 0
    # collinear exponentials with equal imaginary parts
    ge = G.exp_group([1, 2])
    assert T.span_dim(ge) == 1
    rotated = G.group_make([
        E.exp_element(2),
        E.exp_element(2, GaussianRational(0, 1)),
    ])
    assert T.span_dim(rotated) == 2


def test_span_dim_twisted_vs_real():
    g = G.group_make([E.exp_element(GaussianRational(0, 1)), E.log_element(2)])
    assert T.span_dim(g) == 2  # e^i is not collinear with a real direction


def test_classify_single_generators():
    assert T.classify(G.exp_group([1])).tag == "Z"
    assert T.classify(G.group_make([E.pi_element(Fraction(2, 3))])).tag == "Z"
    assert T.classify(G.group_make([E.t_element("Tz1")])).tag == "Z"
    assert T.classify(G.group_make([E.log_element(5)])).tag == "Z"


def test_classify_trivial():
    assert T.classify(G.group_make([])).tag == "Trivial"
    assert T.classify(G.group_make([E.zero_element()])).tag == "Trivial"


def test_classify_pair_group_with_min_norm():
    g = G.pair_group("Tmn", binding="e")
    cls = T.classify(g)
    assert cls.tag == "ZxZ"
    assert cls.min_norm is not None
    assert contains_digits(cls.min_norm, E_110)
    assert cls.min_norm_coeff is not None and cls.min_norm_coeff.norm2() == 1


def test_classify_qlike_with_witness():
    cls = T.classify(G.log_group([2, 3]))
    assert cls.tag == "QLike"
    assert cls.witness is not None
    box = cls.witness_box
    assert not box.contains_zero()
    mag = box.abs_interval(256)
    assert mag.hi_fraction() < Fraction(1, 1000)
    # the witness is a replayable member
    assert G.member(G.log_group([2, 3]), cls.witness).is_yes()


def test_classify_exp_rank3():
    cls = T.classify(G.exp_group([1, 2, 3]))
    assert cls.tag == "QLike"
    assert cls.rank == 3 and cls.span == 1


def test_classify_mixed_unknown():
    cls = T.classify(G.group_make([E.exp_element(1), E.pi_element()]))
    assert cls.tag == "Unknown"
    assert cls.reason == UnknownReason.SCHANUEL_CONDITIONAL


def test_classify_logalg_unknown():
    r2 = alg.sqrt_fraction(2)
    cls = T.classify(G.log_group([2, r2]))
    assert cls.tag == "Unknown"
    assert cls.reason == UnknownReason.MULTIPLICATIVE_RELATION_POSSIBLE


def test_trichotomy_totality_on_constructor_corpus():
    corpus = [
        G.exp_group([1]),
        G.exp_group([Fraction(1, 3), Fraction(2, 3)]),
        G.exp_group([GaussianRational(0, 1), 1]),
        G.log_group([2]),
        G.log_group([2, 3, 5]),
        G.log_group([4, 8]),
        G.pair_group("Ttot"),
        G.group_make([E.t_element("Ttot2", Fraction(5, 3))]),
    ]
    for g in corpus:
        assert T.classify(g).tag in ("Trivial", "Z", "ZxZ", "QLike")


def test_subgroup_monotonicity():
    g = G.exp_group([Fraction(1, 2), Fraction(3, 2)])
    assert T.classify(g).tag == "QLike"
    sub = G.group_make([g.generators[0]])
    assert T.classify(sub).tag in ("Trivial", "Z")
    z = G.group_make([E.t_element("Tsub", 2), E.t_element("Tsub", 3)])
    assert T.classify(z).tag == "Z"
    sub2 = G.group_make([z.generators[0]])
    assert T.classify(sub2).tag == "Z"


def test_min_norm_pair_bound_to_e():
    g = G.pair_group("Tminn", binding="e")
    enc = T.min_norm(g, bound=8, bits=128)
    assert contains_digits(enc, E_110)
    assert enc.width_fraction() < Fraction(1, 10**20)
    m, brute_enc = O.brute_min_norm(g, 20, bits=128)
    assert enc.overlaps(brute_enc)
    assert sum(x * x for x in (m[0], m[1])) == 1


def test_min_norm_scaled_single_generator():
    g = G.group_make([E.t_element("Tm2", 2, real=True)])
    # exact lattice data without a binding
    cls = T.classify(g)
    assert cls.tag == "Z"
    assert cls.min_norm_coeff is not None
    assert abs(cls.min_norm_coeff.re) == 2


def test_min_norm_not_discrete():
    with pytest.raises(NotDiscrete):
        T.min_norm(G.log_group([2, 3]))


def test_min_norm_exp_pair_vs_enumeration():
    g = G.exp_group([GaussianRational(0, 1), GaussianRational(0, 2)])
    cls = T.classify(g)
    assert cls.tag == "ZxZ"
    enc = T.min_norm(g, bound=6, bits=96)
    m, brute_enc = O.brute_min_norm(g, 30, bits=96)
    assert enc.overlaps(brute_enc)


def test_discreteness_certificate_sound():
    # no nonzero combination up to height 50 may fall below the bound
    g = G.pair_group("Tcert50", binding="e")
    cls = T.classify(g)
    delta = cls.min_norm.lo
    gens = list(g.generators)
    boxes = [x.eval_box(96) for x in gens]
    prec = 104
    for m, n in itertools.product(range(-50, 51), repeat=2):
        if not (m or n):
            continue
        total = boxes[0].scale_gaussian(GaussianRational(m), prec).add(
            boxes[1].scale_gaussian(GaussianRational(n), prec), prec
        )
        assert not total.abs_interval(prec).hi < delta


def test_gauss_lagrange_reduces():
    u1 = E.exp_element(GaussianRational(0, 1))
    u2 = E.exp_element(GaussianRational(0, 1)).scale(3) + E.exp_element(
        GaussianRational(0, 2)
    )
    a, b = T._gauss_lagrange(u1, u2)
    na = a.eval_box(96).abs2(100)
    nb = b.eval_box(96).abs2(100)
    assert na.lo_fraction() <= nb.hi_fraction()
