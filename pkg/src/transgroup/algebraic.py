"""Exact complex algebraic numbers.

A number is stored as a squarefree integer annihilating polynomial plus a
certified isolating box: a rectangle with dyadic rational corners that
contains exactly one root of the polynomial and from which a Krawczyk
(interval Newton) step contracts.  The polynomial need not be minimal;
equality and zero tests stay exact because isolation makes the box test
conclusive.

Arithmetic composes annihilators by resultants (with shift/scale fast
paths for Gaussian-rational operands) and re-isolates the result against
the certified complete root list of the output polynomial.
"""

from __future__ import annotations

import threading
from fractions import Fraction

import mpmath

from . import _poly
from .errors import NotIsolating, PrecisionExhausted, ZeroPolynomial
from .intervals import Box, RealInterval
from .rationals import GaussianRational

MAX_REFINE_BITS = 4096
MAX_ROUNDS = 64

_root_list_cache: dict[tuple[int, ...], list["AlgebraicNumber"]] = {}
_root_list_lock = threading.Lock()


# ---------------------------------------------------------------------------
# Krawczyk certification
# ---------------------------------------------------------------------------


def _krawczyk_step_2d(poly, dpoly, X: Box, prec: int) -> Box | None:
    """One complex Krawczyk step; returns K(X) & X if K(X) is interior to X.

    K(X) = y - rho*p(y) + (1 - rho*p'(X)) * (X - y) with y the exact dyadic
    midpoint and rho a fixed rational approximation of 1/p'(y).  Rotation-
    scaling matrices multiply like complex numbers, so the classical real
    2x2 Krawczyk operator collapses to complex interval arithmetic.
    """
    my_re, my_im = X.mid_fractions()
    y = Box.point(my_re, my_im)
    py = _poly.eval_box(poly, y, prec)
    dy = _poly.eval_box(dpoly, y, prec)
    dre, dim_ = dy.re.mid_fraction(), dy.im.mid_fraction()
    n = dre * dre + dim_ * dim_
    if not n:
        return None
    rho = Box.from_fractions(dre / n, -dim_ / n, prec)
    D = _poly.eval_box(dpoly, X, prec)
    one = Box.point(1)
    K = y.sub(rho.mul(py, prec), prec).add(
        one.sub(rho.mul(D, prec), prec).mul(X.sub(y, prec), prec), prec
    )
    if K.inside_interior(X):
        return K.intersect(X)
    return None


def _krawczyk_step_1d(poly, dpoly, X: Box, prec: int) -> Box | None:
    """Krawczyk step along the real axis for a degenerate real box."""
    iv = X.re
    y = iv.mid_fraction()
    ypt = RealInterval.point(y)
    py = _poly.eval_box(poly, Box(ypt, RealInterval.point(0)), prec).re
    dy = _poly.eval_box(dpoly, Box(ypt, RealInterval.point(0)), prec).re
    dmid = dy.mid_fraction()
    if not dmid:
        return None
    rho = RealInterval.from_fraction(1 / dmid, prec)
    D = _poly.eval_box(dpoly, X, prec).re
    one = RealInterval.point(1)
    K = (
        ypt.sub(rho.mul(py, prec), prec)
        .add(one.sub(rho.mul(D, prec), prec).mul(iv.sub(ypt, prec), prec), prec)
    )
    if K.inside_interior(iv):
        lo, hi = max(K.lo, iv.lo), min(K.hi, iv.hi)
        return Box(RealInterval(lo, hi), RealInterval.point(0))
    return None


def _is_degenerate_real(X: Box) -> bool:
    return X.im.is_point() and X.im.lo_fraction() == 0


def _krawczyk_certify(poly, X: Box, prec: int) -> Box | None:
    dpoly = _poly.derivative(poly)
    step = _krawczyk_step_1d if _is_degenerate_real(X) else _krawczyk_step_2d
    return step(poly, dpoly, X, prec)


def _krawczyk_refine(poly, X: Box, target_bits: int) -> Box:
    """Shrink a certified box below 2^-target_bits; quadratic convergence."""
    if target_bits > MAX_REFINE_BITS:
        raise PrecisionExhausted(f"refinement target {target_bits} exceeds budget")
    dpoly = _poly.derivative(poly)
    step = _krawczyk_step_1d if _is_degenerate_real(X) else _krawczyk_step_2d
    if X.width_le(target_bits):
        return X
    prec = 128
    for _ in range(MAX_ROUNDS):
        K = step(poly, dpoly, X, prec)
        if K is not None:
            X = K
            if X.width_le(target_bits):
                return X
        prec = min(prec * 2, 16 * MAX_REFINE_BITS)
    raise PrecisionExhausted(f"could not refine box below 2^-{target_bits}")


# ---------------------------------------------------------------------------
# Complete certified root lists
# ---------------------------------------------------------------------------


def _exact_rational_root_box(num: int, den: int) -> Box:
    """Certified box for the root of den*x - (-num) ... i.e. value -num/den."""
    val = Fraction(-num, den)
    d = val.denominator
    if d & (d - 1) == 0:
        return Box.point(val, 0)
    lo = RealInterval.from_fraction(val, 128)
    return Box(lo, RealInterval.point(0))


def _mpf_to_fraction(x) -> Fraction:
    """Exact value of an mpmath float (mpf are dyadic)."""
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    if man == 0:
        return Fraction(0)
    v = Fraction(int(man), 1) * (Fraction(2) ** int(exp))
    return -v if sign else v


def _rect(re_lo: Fraction, re_hi: Fraction, im_lo: Fraction, im_hi: Fraction,
          prec: int) -> Box:
    return Box(
        RealInterval.from_endpoints(re_lo, re_hi, prec),
        RealInterval.from_endpoints(im_lo, im_hi, prec),
    )


def _seed_root_boxes(poly) -> list[Box] | None:
    """Certified disjoint boxes around every root of a squarefree poly."""
    deg = _poly.degree(poly)
    if deg == 1:
        return [_exact_rational_root_box(poly[0], poly[1])]
    coeffs_high_first = [int(c) for c in reversed(poly)]
    prec = 120
    for _attempt in range(8):
        with mpmath.workprec(prec):
            try:
                roots = mpmath.polyroots(
                    coeffs_high_first, maxsteps=200, extraprec=prec
                )
            except mpmath.libmp.libhyper.NoConvergence:
                prec *= 2
                continue
            sep = None
            for i in range(deg):
                for j in range(i + 1, deg):
                    d = abs(roots[i] - roots[j])
                    sep = d if sep is None else min(sep, d)
            radius = Fraction(1, 2 ** max(16, prec // 3))
            if sep is not None and sep > 0:
                radius = min(max(radius, Fraction(1, 2**prec)),
                             _mpf_to_fraction(sep) / 8)
            boxes = []
            ok = True
            for r in roots:
                cre = _mpf_to_fraction(r.real)
                cim = _mpf_to_fraction(r.imag)
                certified = None
                if abs(cim) <= radius:  # candidate real root
                    X = Box(
                        RealInterval.from_endpoints(cre - radius, cre + radius, prec),
                        RealInterval.point(0),
                    )
                    certified = _krawczyk_certify(poly, X, prec)
                if certified is None:
                    X = _rect(cre - radius, cre + radius,
                              cim - radius, cim + radius, prec)
                    certified = _krawczyk_certify(poly, X, prec)
                if certified is None:
                    ok = False
                    break
                boxes.append(certified)
            if ok:
                for i in range(len(boxes)):
                    for j in range(i + 1, len(boxes)):
                        if boxes[i].overlaps(boxes[j]):
                            ok = False
            if ok and len(boxes) == deg:
                return boxes
        prec *= 2
    return None


def root_list(poly: tuple[int, ...]) -> list["AlgebraicNumber"]:
    """All roots of the squarefree canonical poly, as certified numbers."""
    with _root_list_lock:
        cached = _root_list_cache.get(poly)
    if cached is not None:
        return cached
    boxes = _seed_root_boxes(poly)
    if boxes is None:
        raise PrecisionExhausted(f"could not certify the root list of {poly}")
    roots = [AlgebraicNumber._raw(poly, b) for b in boxes]
    with _root_list_lock:
        _root_list_cache.setdefault(poly, roots)
        return _root_list_cache[poly]


# ---------------------------------------------------------------------------
# The number type
# ---------------------------------------------------------------------------


class AlgebraicNumber:
    """An exact algebraic number: squarefree annihilator + certified box."""

    __slots__ = ("poly", "_box", "_box_bits", "_gauss", "_gauss_known", "_lock",
                 "display_hint")

    def __init__(self, *args, **kwargs):
        raise TypeError("use the module constructors (make, from_fraction, ...)")

    @classmethod
    def _raw(cls, poly, box, gauss=None, display=None):
        self = object.__new__(cls)
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "_box", box)
        object.__setattr__(self, "_box_bits", 0)
        object.__setattr__(self, "_gauss", gauss)
        object.__setattr__(self, "_gauss_known", gauss is not None)
        object.__setattr__(self, "_lock", threading.Lock())
        object.__setattr__(self, "display_hint", display)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraicNumber is immutable")

    # -- refinement -----------------------------------------------------

    def refine(self, bits: int) -> Box:
        """A certified box of width <= 2^-bits; the number itself is unchanged."""
        with self._lock:
            if self._box_bits >= bits:
                return self._box
        refined = _krawczyk_refine(self.poly, self._box, bits)
        with self._lock:
            if bits > self._box_bits:
                object.__setattr__(self, "_box", refined)
                object.__setattr__(self, "_box_bits", bits)
            return self._box

    def box(self) -> Box:
        return self._box

    @property
    def degree(self) -> int:
        return _poly.degree(self.poly)

    # -- exact predicates -------------------------------------------------

    def _fast_gauss(self):
        """Exact value if already known, else None (no detection work)."""
        return self._gauss if self._gauss_known else None

    def _known_irrational(self) -> bool:
        return self._gauss_known and self._gauss is None

    def is_zero(self) -> bool:
        """Exact: 0 is a root of poly and lies in the isolating box."""
        g = self._fast_gauss()
        if g is not None:
            return g.is_zero()
        if self.poly[0] != 0:
            return False
        return self._box.contains_gaussian(0, 0)

    def is_real(self) -> bool:
        g = self._fast_gauss()
        if g is not None:
            return g.is_real()
        if _is_degenerate_real(self._box):
            return True
        if not self._box.im.contains_zero():
            return False
        return equals(self, conj(self))

    def is_imaginary(self) -> bool:
        g = self._fast_gauss()
        if g is not None:
            return g.is_imaginary()
        if not self._box.re.contains_zero():
            return False
        return equals(self, neg(conj(self)))

    def as_gaussian(self) -> GaussianRational | None:
        """Exact Gaussian-rational value, or None if the number is irrational."""
        with self._lock:
            if self._gauss_known:
                return self._gauss
        val = _detect_gaussian(self)
        with self._lock:
            if not self._gauss_known:
                object.__setattr__(self, "_gauss", val)
                object.__setattr__(self, "_gauss_known", True)
            return self._gauss

    def sign_real(self) -> int:
        """Sign of a real algebraic number (exact)."""
        if self.is_zero():
            return 0
        bits = 32
        while True:
            b = self.refine(bits)
            if b.re.strictly_positive():
                return 1
            if b.re.strictly_negative():
                return -1
            bits *= 2
            if bits > MAX_REFINE_BITS:
                raise PrecisionExhausted("sign of a real algebraic number")

    # -- operators ---------------------------------------------------------

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __neg__(self):
        return neg(self)

    def __eq__(self, other):
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        return equals(self, other)

    __hash__ = None

    def __repr__(self):
        g = self._fast_gauss()
        if g is not None:
            return f"<alg {g}>"
        re, im = self._box.mid_fractions()
        return f"<alg deg {self.degree} near {float(re):.6g}{float(im):+.6g}i>"


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def from_gaussian(g) -> AlgebraicNumber:
    g = GaussianRational.coerce(g)
    u, v = g.re, g.im
    if not v:
        poly = _poly.normalize((-u.numerator, u.denominator))
        box = _exact_rational_root_box(poly[0], poly[1]) if u else Box.point(0, 0)
        if u == 0:
            poly = (0, 1)
        return AlgebraicNumber._raw(poly, box, gauss=g)
    # (x-u)^2 + v^2, cleared to integer coefficients
    c0 = u * u + v * v
    c1 = -2 * u
    den = c0.denominator
    den = den * c1.denominator // _gcd2(den, c1.denominator)
    poly = _poly.normalize((int(c0 * den), int(c1 * den), den))
    prec = 64
    while True:
        box = Box.from_fractions(u, v, prec)
        if not box.im.contains_zero() and box.im.width_fraction() < abs(v):
            cert = _krawczyk_certify(poly, _inflate(box, prec), prec)
            if cert is not None:
                return AlgebraicNumber._raw(poly, cert, gauss=g)
        prec *= 2
        if prec > MAX_REFINE_BITS:
            raise PrecisionExhausted("constructing a Gaussian rational box")


def _gcd2(a, b):
    from math import gcd

    return gcd(a, b)


def _inflate(box: Box, prec: int) -> Box:
    pad = Fraction(1, 2 ** max(8, prec // 2))
    return Box(
        RealInterval.from_endpoints(
            box.re.lo_fraction() - pad, box.re.hi_fraction() + pad, prec
        ),
        RealInterval.from_endpoints(
            box.im.lo_fraction() - pad, box.im.hi_fraction() + pad, prec
        ),
    )


def from_fraction(q) -> AlgebraicNumber:
    return from_gaussian(GaussianRational(Fraction(q)))


def from_int(n: int) -> AlgebraicNumber:
    return from_gaussian(GaussianRational(n))


def unit_i() -> AlgebraicNumber:
    return from_gaussian(GaussianRational(0, 1))


def sqrt_fraction(q) -> AlgebraicNumber:
    """The principal square root of a rational: real for q >= 0, else i*sqrt(|q|)."""
    q = Fraction(q)
    if q == 0:
        return from_int(0)
    root = _try_exact_sqrt(q)
    if root is not None:
        return from_fraction(root) if q > 0 else from_gaussian(
            GaussianRational(0, root)
        )
    poly = _poly.normalize((-q.numerator, 0, q.denominator))
    display = f"sqrt({q})"
    target = abs(q) if abs(q) > 1 else 1 / abs(q)
    prec = max(64, target.numerator.bit_length() + target.denominator.bit_length())
    if q > 0:
        for _ in range(8):
            approx = _fraction_sqrt_bounds(q, prec)
            X = Box(
                RealInterval.from_endpoints(approx[0], approx[1], prec),
                RealInterval.point(0),
            )
            cert = _krawczyk_certify(poly, X, prec)
            if cert is not None:
                return AlgebraicNumber._raw(poly, cert, display=display)
            prec *= 2
        raise PrecisionExhausted("sqrt isolation")
    for _ in range(8):
        lo, hi = _fraction_sqrt_bounds(-q, prec)
        rad = (hi - lo) / 2
        X = Box(
            RealInterval.from_endpoints(-rad, rad, prec),
            RealInterval.from_endpoints(lo, hi, prec),
        )
        cert = _krawczyk_certify(poly, X, prec)
        if cert is not None:
            return AlgebraicNumber._raw(poly, cert, display=f"sqrt({q})")
        prec *= 2
    raise PrecisionExhausted("sqrt isolation")


def _try_exact_sqrt(q: Fraction) -> Fraction | None:
    from math import isqrt

    aq = abs(q)
    rn, rd = isqrt(aq.numerator), isqrt(aq.denominator)
    if rn * rn == aq.numerator and rd * rd == aq.denominator:
        return Fraction(rn, rd)
    return None


def _fraction_sqrt_bounds(q: Fraction, prec: int) -> tuple[Fraction, Fraction]:
    """Bounds around sqrt(q) wide enough to beat Krawczyk arithmetic noise."""
    from math import isqrt

    scale = 2 ** (2 * prec)
    v = isqrt((q.numerator * scale) // q.denominator)
    rad = Fraction(1, 2 ** (prec // 2)) + Fraction(2, 2**prec)
    center = Fraction(v, 2**prec)
    return max(center - rad, Fraction(0)), center + rad


def make(poly, box_corners) -> AlgebraicNumber:
    """The unique root of poly inside the closed rational rectangle.

    poly: iterable of int coefficients, lowest degree first.
    box_corners: (re_lo, re_hi, im_lo, im_hi) rationals.
    Raises NotIsolating if the closed box does not contain exactly one root
    of the squarefree part.
    """
    p = _poly.strip(poly)
    if not p:
        raise ZeroPolynomial("cannot isolate a root of the zero polynomial")
    if _poly.degree(p) == 0:
        raise NotIsolating("a nonzero constant has no roots")
    p = _poly.sqf_part(p)
    re_lo, re_hi, im_lo, im_hi = (Fraction(c) for c in box_corners)
    if re_lo > re_hi or im_lo > im_hi:
        raise NotIsolating("box corners out of order")
    roots = root_list(p)
    inside = []
    for r in roots:
        status = _root_in_closed_rect(r, re_lo, re_hi, im_lo, im_hi)
        if status:
            inside.append(r)
    if len(inside) != 1:
        raise NotIsolating(
            f"box contains {len(inside)} roots of the squarefree part, need exactly 1"
        )
    found = inside[0]
    return AlgebraicNumber._raw(p, found.refine(16), gauss=found.as_gaussian()
                                if found._gauss_known else None)


def _root_in_closed_rect(r: AlgebraicNumber, re_lo, re_hi, im_lo, im_hi) -> bool:
    """Exact membership of a certified root in a closed rational rectangle."""
    bits = 32
    while bits <= MAX_REFINE_BITS:
        b = r.refine(bits)
        b_re_lo, b_re_hi = b.re.lo_fraction(), b.re.hi_fraction()
        b_im_lo, b_im_hi = b.im.lo_fraction(), b.im.hi_fraction()
        if b_re_lo > re_hi or b_re_hi < re_lo or b_im_lo > im_hi or b_im_hi < im_lo:
            return False
        if re_lo <= b_re_lo and b_re_hi <= re_hi and im_lo <= b_im_lo and b_im_hi <= im_hi:
            return True
        bits *= 2
    # The root straddles the boundary at full budget: decide exactly.
    return _boundary_membership(r, re_lo, re_hi, im_lo, im_hi)


def _boundary_membership(r, re_lo, re_hi, im_lo, im_hi) -> bool:
    two_re = add(r, conj(r))  # 2*Re(r), real algebraic
    two_im = mul(sub(r, conj(r)), from_gaussian(GaussianRational(0, -1)))  # 2*Im(r)
    re_ok = _real_in_segment(two_re, 2 * re_lo, 2 * re_hi)
    im_ok = _real_in_segment(two_im, 2 * im_lo, 2 * im_hi)
    return re_ok and im_ok


def _real_in_segment(a: AlgebraicNumber, lo: Fraction, hi: Fraction) -> bool:
    left = sub(a, from_fraction(lo))
    right = sub(a, from_fraction(hi))
    return left.sign_real() >= 0 and right.sign_real() <= 0


# ---------------------------------------------------------------------------
# Arithmetic
# ---------------------------------------------------------------------------


def _resolve(poly: tuple[int, ...], a: AlgebraicNumber, b: AlgebraicNumber | None,
             combine) -> AlgebraicNumber:
    """Pick the root of poly equal to combine(box(a), box(b))."""
    roots = root_list(poly)
    if len(roots) == 1:
        only = roots[0]
        return AlgebraicNumber._raw(poly, only.refine(16))
    bits = 48
    while bits <= MAX_REFINE_BITS * 4:
        prec = bits + 16
        va = a.refine(min(bits, MAX_REFINE_BITS))
        vb = b.refine(min(bits, MAX_REFINE_BITS)) if b is not None else None
        value = combine(va, vb, prec)
        candidates = [
            r for r in roots
            if r.refine(min(bits, MAX_REFINE_BITS)).overlaps(value)
        ]
        if len(candidates) == 1:
            target = candidates[0]
            return AlgebraicNumber._raw(poly, target.refine(16))
        if not candidates:
            raise AssertionError("value box missed every certified root")
        bits *= 2
    raise PrecisionExhausted("could not separate candidate roots")


def add(a: AlgebraicNumber, b: AlgebraicNumber) -> AlgebraicNumber:
    ga, gb = a._fast_gauss(), b._fast_gauss()
    if ga is not None and gb is not None:
        return from_gaussian(ga + gb)
    if ga is not None and ga.is_zero():
        return b
    if gb is not None and gb.is_zero():
        return a
    if ga is not None or gb is not None:
        num, g = (b, ga) if ga is not None else (a, gb)
        poly = _poly.shift_roots_by_gaussian(num.poly, g)
        return _resolve(poly, num, from_gaussian(g),
                        lambda x, y, p: x.add(y, p))
    poly = _poly.annihilator_sum(a.poly, b.poly)
    return _resolve(poly, a, b, lambda x, y, p: x.add(y, p))


def neg(a: AlgebraicNumber) -> AlgebraicNumber:
    g = a._fast_gauss()
    if g is not None:
        return from_gaussian(-g)
    poly = _poly.negate_roots(a.poly)
    box = a.box()
    return AlgebraicNumber._raw(poly, Box(box.re.neg(), box.im.neg()),
                                display=None)


def sub(a: AlgebraicNumber, b: AlgebraicNumber) -> AlgebraicNumber:
    return add(a, neg(b))


def mul(a: AlgebraicNumber, b: AlgebraicNumber) -> AlgebraicNumber:
    ga, gb = a._fast_gauss(), b._fast_gauss()
    if ga is not None and gb is not None:
        return from_gaussian(ga * gb)
    if a.is_zero() or b.is_zero():
        return from_int(0)
    if ga is not None or gb is not None:
        num, g = (b, ga) if ga is not None else (a, gb)
        if g.is_one():
            return num
        poly = _poly.scale_roots_by_gaussian(num.poly, g)
        return _resolve(poly, num, from_gaussian(g),
                        lambda x, y, p: x.mul(y, p))
    poly = _poly.annihilator_product(a.poly, b.poly)
    return _resolve(poly, a, b, lambda x, y, p: x.mul(y, p))


def conj(a: AlgebraicNumber) -> AlgebraicNumber:
    g = a._fast_gauss()
    if g is not None:
        return from_gaussian(g.conjugate())
    box = a.box()
    return AlgebraicNumber._raw(a.poly, Box(box.re, box.im.neg()))


def arith(op: str, a: AlgebraicNumber, b: AlgebraicNumber | None = None):
    """Functional dispatch: add, sub, mul, neg, conj."""
    if op == "add":
        return add(a, b)
    if op == "sub":
        return sub(a, b)
    if op == "mul":
        return mul(a, b)
    if op == "neg":
        return neg(a)
    if op == "conj":
        return conj(a)
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# Decisions
# ---------------------------------------------------------------------------


def is_zero(a: AlgebraicNumber) -> bool:
    return a.is_zero()


def _identify_root(x: AlgebraicNumber, roots: list[AlgebraicNumber]) -> int:
    """Index of the certified root x equals; x must be a root of the list's
    polynomial, so refinement separates it from every other root."""
    bits = 32
    while bits <= MAX_REFINE_BITS:
        bx = x.refine(bits)
        cands = [i for i, r in enumerate(roots)
                 if r.refine(min(bits, 512)).overlaps(bx)]
        if len(cands) == 1:
            return cands[0]
        if not cands:
            raise AssertionError("value escaped every certified root box")
        bits *= 2
    raise PrecisionExhausted("root identification did not separate")


def equals(a: AlgebraicNumber, b: AlgebraicNumber) -> bool:
    """Exact equality, without composing annihilators.

    a = b can only happen at a common root of the two polynomials, i.e. a
    root of their gcd; identifying a, b and each gcd root against the
    certified root lists decides equality by box refinement alone.
    """
    ga, gb = a._fast_gauss(), b._fast_gauss()
    if ga is not None and gb is not None:
        return ga == gb
    if (ga is not None and b._known_irrational()) or (
        gb is not None and a._known_irrational()
    ):
        return False
    if not a.box().overlaps(b.box()):
        return False
    g = _poly.gcd_poly(a.poly, b.poly)
    if _poly.degree(g) == 0:
        return False
    if a.poly == b.poly:
        roots = root_list(a.poly)
        return _identify_root(a, roots) == _identify_root(b, roots)
    roots_a = root_list(a.poly)
    roots_b = root_list(b.poly)
    ia = _identify_root(a, roots_a)
    ib = _identify_root(b, roots_b)
    for r in root_list(g):
        if not r.box().overlaps(a.box()) and not r.box().overlaps(b.box()):
            continue
        if (_identify_root(r, roots_a) == ia
                and _identify_root(r, roots_b) == ib):
            return True
    return False


def im_is_zero(a: AlgebraicNumber) -> bool:
    return a.is_real()


def re_is_zero(a: AlgebraicNumber) -> bool:
    return a.is_imaginary()


def _detect_gaussian(a: AlgebraicNumber) -> GaussianRational | None:
    two_re = add(a, conj(a))
    re_half = _detect_rational_real(two_re)
    if re_half is None:
        return None
    two_im = mul(sub(a, conj(a)), from_gaussian(GaussianRational(0, -1)))
    im_half = _detect_rational_real(two_im)
    if im_half is None:
        return None
    return GaussianRational(re_half / 2, im_half / 2)


def _detect_rational_real(a: AlgebraicNumber) -> Fraction | None:
    """Exact rational value of a real algebraic number, or None.

    A rational root p/q of the annihilator has q dividing the leading
    coefficient, so refining below 1/(4L^2) makes the best approximation
    with denominator <= L unique; the candidate is then verified exactly.
    """
    g = a._fast_gauss()
    if g is not None:
        return g.re if g.is_real() else None
    if a._known_irrational():
        return None
    lead = abs(a.poly[-1])
    need = 2 * (2 * lead * lead).bit_length() + 4
    box = a.refine(need)
    cand = box.re.mid_fraction().limit_denominator(lead)
    if _poly.eval_fraction(a.poly, cand) == 0 and box.re.contains_fraction(cand):
        if box.im.contains_zero():
            return cand
    return None


def compare_lex(a: AlgebraicNumber, b: AlgebraicNumber) -> int:
    """Total order on distinct numbers by (Re, Im); 0 iff equal."""
    if equals(a, b):
        return 0
    bits = 32
    re_decided = None
    while bits <= MAX_REFINE_BITS:
        ba, bb = a.refine(bits), b.refine(bits)
        if ba.re.hi < bb.re.lo:
            return -1
        if bb.re.hi < ba.re.lo:
            return 1
        if bits >= 256 and re_decided is None:
            re_equal = sub(add(a, conj(a)), add(b, conj(b))).is_zero()
            if not re_equal:
                re_decided = False  # keep refining, they must separate
            else:
                break
        bits *= 2
    else:
        raise PrecisionExhausted("lexicographic comparison (real parts)")
    # real parts exactly equal: compare imaginary parts
    bits = 32
    while bits <= MAX_REFINE_BITS:
        ba, bb = a.refine(bits), b.refine(bits)
        if ba.im.hi < bb.im.lo:
            return -1
        if bb.im.hi < ba.im.lo:
            return 1
        bits *= 2
    raise PrecisionExhausted("lexicographic comparison (imaginary parts)")
