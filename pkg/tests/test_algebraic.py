"""Algebraic numbers: construction, arithmetic, exact decisions."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from transgroup import algebraic as alg
from transgroup.errors import DegreeOverflow, NotIsolating, ZeroPolynomial
from transgroup.rationals import GaussianRational

from conftest import SQRT2_60

small_fracs = st.fractions(
    min_value=Fraction(-6), max_value=Fraction(6), max_denominator=6
)


@pytest.fixture(scope="module")
def sqrt2():
    return alg.make((-2, 0, 1), (1, 2, 0, 0))


@pytest.fixture(scope="module")
def unit_i():
    return alg.make((1, 0, 1), (-1, 1, 0, 2))


def test_make_sqrt2(sqrt2):
    box = sqrt2.refine(50)
    assert box.width_le(50)
    assert box.re.contains_fraction(Fraction(SQRT2_60))


def test_make_i(unit_i):
    assert unit_i.as_gaussian() == GaussianRational(0, 1)


def test_make_x4_minus_4_matches_sqrt2(sqrt2):
    # factorization oracle: x^4 - 4 = (x^2 - 2)(x^2 + 2) shares the root
    x = sympy.symbols("x")
    factors = sympy.Mul.make_args(sympy.factor(x**4 - 4))
    assert any(sympy.expand(f - (x**2 - 2)) == 0 for f in factors)
    other = alg.make((-4, 0, 0, 0, 1), (Fraction(13, 10), Fraction(3, 2), 0, 0))
    assert alg.equals(sqrt2, other)
    assert not alg.equals(sqrt2, alg.neg(other))


def test_make_errors():
    with pytest.raises(ZeroPolynomial):
        alg.make((), (0, 1, 0, 1))
    with pytest.raises(NotIsolating):
        alg.make((-4, 0, 1), (-3, 3, 0, 0))  # contains both -2 and 2
    with pytest.raises(NotIsolating):
        alg.make((1, 0, 1), (5, 6, 0, 0))  # contains no root


def test_boundary_root_is_member():
    # the closed box [1,2] contains the root 2 of x^2 - 4 on its boundary
    v = alg.make((-4, 0, 1), (1, 2, 0, 0))
    assert v.as_gaussian() == GaussianRational(2)


def test_arith_identities(sqrt2, unit_i):
    assert alg.sub(sqrt2, sqrt2).is_zero()
    assert alg.add(sqrt2, alg.neg(sqrt2)).is_zero()
    assert alg.equals(alg.mul(unit_i, unit_i), alg.from_int(-1))


def test_arith_dispatch(sqrt2):
    assert alg.arith("sub", sqrt2, sqrt2).is_zero()
    assert alg.equals(alg.arith("neg", sqrt2), alg.neg(sqrt2))
    with pytest.raises(ValueError):
        alg.arith("pow", sqrt2, sqrt2)


def test_is_zero_examples(sqrt2):
    assert alg.from_int(0).is_zero()
    assert not sqrt2.is_zero()
    assert not alg.equals(sqrt2, alg.neg(sqrt2))


def test_im_is_zero(sqrt2, unit_i):
    assert alg.im_is_zero(sqrt2)
    assert not alg.im_is_zero(unit_i)
    two_i = alg.from_gaussian(GaussianRational(0, 2))
    assert not alg.im_is_zero(alg.sub(two_i, unit_i))  # equals i
    assert alg.re_is_zero(unit_i)


def test_refine_examples(sqrt2, unit_i):
    z = alg.from_int(0).refine(10)
    assert z.re.is_point() and z.re.lo_fraction() == 0
    b = unit_i.refine(20)
    assert b.width_le(20)
    assert b.im.contains_fraction(1)


def test_nested_box_consistency(sqrt2):
    boxes = [sqrt2.refine(bits) for bits in (16, 40, 80, 160)]
    for i in range(len(boxes)):
        for j in range(len(boxes)):
            assert boxes[i].overlaps(boxes[j])


def test_conj_involution_and_realness(sqrt2, unit_i):
    z = alg.add(sqrt2, alg.mul(unit_i, alg.from_int(3)))
    assert alg.equals(alg.conj(alg.conj(z)), z)
    assert alg.im_is_zero(z) == alg.equals(z, alg.conj(z))
    assert alg.im_is_zero(sqrt2) == alg.equals(sqrt2, alg.conj(sqrt2))


@settings(max_examples=40, deadline=None)
@given(a=small_fracs, b=small_fracs)
def test_rational_embedding_matches_fraction_arithmetic(a, b):
    x, y = alg.from_fraction(a), alg.from_fraction(b)
    assert alg.add(x, y).as_gaussian() == GaussianRational(a + b)
    assert alg.mul(x, y).as_gaussian() == GaussianRational(a * b)
    assert alg.sub(x, y).is_zero() == (a == b)


def test_equals_is_equivalence_on_corpus(sqrt2):
    corpus = [
        sqrt2,
        alg.make((-4, 0, 0, 0, 1), (1, 2, 0, 0)),
        alg.sqrt_fraction(2),
        alg.from_fraction(Fraction(3, 2)),
        alg.from_gaussian(GaussianRational(Fraction(3, 2))),
        alg.neg(sqrt2),
        alg.sqrt_fraction(8),
        alg.mul(alg.from_int(2), alg.sqrt_fraction(2)),
    ]
    n = len(corpus)
    eq = [[alg.equals(corpus[i], corpus[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        assert eq[i][i]
        for j in range(n):
            assert eq[i][j] == eq[j][i]
            for k in range(n):
                if eq[i][j] and eq[j][k]:
                    assert eq[i][k]
    assert eq[0][1] and eq[0][2]          # three spellings of sqrt 2
    assert eq[3][4]
    assert eq[6][7]                        # sqrt 8 = 2 sqrt 2
    assert not eq[0][5]


def test_sqrt_constructors():
    assert alg.sqrt_fraction(9).as_gaussian() == GaussianRational(3)
    assert alg.sqrt_fraction(Fraction(-9)).as_gaussian() == GaussianRational(0, 3)
    s = alg.sqrt_fraction(Fraction(-1, 2))
    assert alg.re_is_zero(s)
    sq = alg.mul(s, s)
    assert sq.as_gaussian() == GaussianRational(Fraction(-1, 2))


def test_compare_lex(sqrt2, unit_i):
    assert alg.compare_lex(sqrt2, alg.neg(sqrt2)) == 1
    assert alg.compare_lex(unit_i, alg.from_gaussian(GaussianRational(0, 2))) == -1
    assert alg.compare_lex(sqrt2, alg.sqrt_fraction(2)) == 0
    # equal real parts, distinct imaginary parts
    a = alg.from_gaussian(GaussianRational(1, 1))
    b = alg.from_gaussian(GaussianRational(1, 2))
    assert alg.compare_lex(a, b) == -1


def test_degree_cap():
    from transgroup import _poly

    p = tuple([-2] + [0] * 99 + [1])   # degree 100
    q = tuple([-3] + [0] * 99 + [1])
    with pytest.raises(DegreeOverflow):
        _poly.annihilator_product(p, q)
    with pytest.raises(DegreeOverflow):
        _poly.annihilator_sum(p, q)


def test_golden_ratio_equation():
    phi = alg.make((-1, -1, 1), (1, 2, 0, 0))
    assert alg.equals(alg.sub(alg.mul(phi, phi), phi), alg.from_int(1))


def test_sign_real(sqrt2):
    assert sqrt2.sign_real() == 1
    assert alg.neg(sqrt2).sign_real() == -1
    assert alg.from_int(0).sign_real() == 0


def test_equals_iff_difference_zero(sqrt2):
    others = [sqrt2, alg.neg(sqrt2), alg.from_int(1), alg.sqrt_fraction(2)]
    for b in others:
        assert alg.equals(sqrt2, b) == alg.sub(sqrt2, b).is_zero()


def test_refinement_budget_exhausts(sqrt2):
    from transgroup.errors import PrecisionExhausted

    with pytest.raises(PrecisionExhausted):
        sqrt2.refine(10**5)
