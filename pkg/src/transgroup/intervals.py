"""Arbitrary-precision rigorous interval arithmetic over the complex plane.

Endpoints are MPFR numbers, i.e. exact dyadic rationals; every operation
rounds outward, so each output box contains the exact image of its input
boxes.  Precision is passed explicitly; nothing here touches hardware
floats.  exp/log/pi enclosures come from MPFR's correctly rounded
functions evaluated once per rounding direction, which is an enclosure
proof in itself.

Width contract: for point inputs, exp/log/pi return a box of width at
most 2^(guard - bits) with guard = 8; violations are bugs.
"""

from __future__ import annotations

from fractions import Fraction

import gmpy2

from .errors import DomainError, PrecisionExhausted

GUARD_BITS = 8
_MAX_ESCALATIONS = 24

_ZERO = gmpy2.mpfr(0)

_ctx_cache: dict[tuple[int, object], object] = {}


def _ctx(prec: int, mode) -> "gmpy2.context":
    key = (prec, mode)
    ctx = _ctx_cache.get(key)
    if ctx is None:
        ctx = gmpy2.context(precision=prec, round=mode)
        _ctx_cache[key] = ctx
    return ctx


def _dn(prec: int):
    return _ctx(prec, gmpy2.RoundDown)


def _up(prec: int):
    return _ctx(prec, gmpy2.RoundUp)


def _as_mpq(x: Fraction):
    return gmpy2.mpq(int(x.numerator), int(x.denominator))


def mpfr_down(x, prec: int):
    """Largest dyadic at `prec` bits that is <= x (x int/Fraction/mpfr)."""
    if isinstance(x, Fraction):
        x = _as_mpq(x)
    return _dn(prec).add(x, _ZERO)


def mpfr_up(x, prec: int):
    if isinstance(x, Fraction):
        x = _as_mpq(x)
    return _up(prec).add(x, _ZERO)


def to_fraction(x) -> Fraction:
    """Exact value of an MPFR endpoint, with plain-int components."""
    num, den = x.as_integer_ratio()
    return Fraction(int(num), int(den))


def _neg_exact(x):
    """Exact negation: MPFR unary minus would round to the global context."""
    return _ctx(max(2, x.precision), gmpy2.RoundDown).minus(x)


class RealInterval:
    """Closed interval [lo, hi] with exact dyadic endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        if not (gmpy2.is_finite(lo) and gmpy2.is_finite(hi)):
            raise PrecisionExhausted("interval endpoint overflowed MPFR range")
        if lo > hi:
            raise ValueError(f"interval endpoints out of order: {lo} > {hi}")
        self.lo = lo
        self.hi = hi

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_fraction(cls, x, prec: int = 64) -> "RealInterval":
        x = Fraction(x)
        return cls(mpfr_down(x, prec), mpfr_up(x, prec))

    @classmethod
    def point(cls, x) -> "RealInterval":
        """Exact degenerate interval; x must be int or dyadic Fraction."""
        if isinstance(x, int):
            prec = max(2, abs(x).bit_length() + 1)
            v = gmpy2.mpfr(x, prec)
        else:
            x = Fraction(x)
            den = x.denominator
            if den & (den - 1):
                raise ValueError("point() requires a dyadic rational")
            prec = max(2, abs(x.numerator).bit_length() + 1)
            v = _dn(prec + den.bit_length()).add(_as_mpq(x), _ZERO)
            if to_fraction(v) != x:
                raise AssertionError("dyadic conversion was not exact")
        return cls(v, v)

    @classmethod
    def hull(cls, *xs) -> "RealInterval":
        los = [x.lo for x in xs]
        his = [x.hi for x in xs]
        return cls(min(los), max(his))

    @classmethod
    def from_endpoints(cls, lo, hi, prec: int = 64) -> "RealInterval":
        """[lo, hi] from rationals, rounded outward."""
        return cls(mpfr_down(Fraction(lo), prec), mpfr_up(Fraction(hi), prec))

    # -- views ------------------------------------------------------------

    def lo_fraction(self) -> Fraction:
        return to_fraction(self.lo)

    def hi_fraction(self) -> Fraction:
        return to_fraction(self.hi)

    def mid_fraction(self) -> Fraction:
        return (self.lo_fraction() + self.hi_fraction()) / 2

    def width_fraction(self) -> Fraction:
        return self.hi_fraction() - self.lo_fraction()

    def width_le(self, bits: int) -> bool:
        """True iff width <= 2^(-bits), decided exactly."""
        return self.width_fraction() <= Fraction(1, 2**bits)

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def contains_fraction(self, x) -> bool:
        x = _as_mpq(Fraction(x))
        return self.lo <= x <= self.hi

    def strictly_positive(self) -> bool:
        return self.lo > 0

    def strictly_negative(self) -> bool:
        return self.hi < 0

    def overlaps(self, other: "RealInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def contains_interval(self, other: "RealInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def inside_interior(self, other: "RealInterval") -> bool:
        """self strictly inside other."""
        return other.lo < self.lo and self.hi < other.hi

    def abs_bounds(self) -> "RealInterval":
        """Enclosure of |x| for x in self (exact endpoint shuffling)."""
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return RealInterval(_neg_exact(self.hi), _neg_exact(self.lo))
        m = max(_neg_exact(self.lo), self.hi)
        return RealInterval(gmpy2.mpfr(0), m)

    # -- arithmetic -------------------------------------------------------

    def add(self, other: "RealInterval", prec: int) -> "RealInterval":
        return RealInterval(
            _dn(prec).add(self.lo, other.lo), _up(prec).add(self.hi, other.hi)
        )

    def sub(self, other: "RealInterval", prec: int) -> "RealInterval":
        return RealInterval(
            _dn(prec).sub(self.lo, other.hi), _up(prec).sub(self.hi, other.lo)
        )

    def neg(self) -> "RealInterval":
        return RealInterval(_neg_exact(self.hi), _neg_exact(self.lo))

    def mul(self, other: "RealInterval", prec: int) -> "RealInterval":
        d, u = _dn(prec), _up(prec)
        pairs = (
            (self.lo, other.lo),
            (self.lo, other.hi),
            (self.hi, other.lo),
            (self.hi, other.hi),
        )
        lo = min(d.mul(a, b) for a, b in pairs)
        hi = max(u.mul(a, b) for a, b in pairs)
        return RealInterval(lo, hi)

    def div(self, other: "RealInterval", prec: int) -> "RealInterval":
        if other.contains_zero():
            raise DomainError("interval division by an interval containing 0")
        d, u = _dn(prec), _up(prec)
        pairs = (
            (self.lo, other.lo),
            (self.lo, other.hi),
            (self.hi, other.lo),
            (self.hi, other.hi),
        )
        lo = min(d.div(a, b) for a, b in pairs)
        hi = max(u.div(a, b) for a, b in pairs)
        return RealInterval(lo, hi)

    def scale_fraction(self, q: Fraction, prec: int) -> "RealInterval":
        if not q:
            z = gmpy2.mpfr(0)
            return RealInterval(z, z)
        qq = _as_mpq(q)
        d, u = _dn(prec), _up(prec)
        if q > 0:
            return RealInterval(d.mul(self.lo, qq), u.mul(self.hi, qq))
        return RealInterval(d.mul(self.hi, qq), u.mul(self.lo, qq))

    def square(self, prec: int) -> "RealInterval":
        a = self.abs_bounds()
        return RealInterval(_dn(prec).mul(a.lo, a.lo), _up(prec).mul(a.hi, a.hi))

    def sqrt(self, prec: int) -> "RealInterval":
        if self.lo < 0:
            raise DomainError("sqrt of an interval reaching below 0")
        return RealInterval(_dn(prec).sqrt(self.lo), _up(prec).sqrt(self.hi))

    def __repr__(self):
        return f"RealInterval({self.lo!r}, {self.hi!r})"

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


def _magnitude_guard(ctx_prec: int, f, x) -> int:
    """Extra bits needed so an absolute width target survives |f(x)| >> 1."""
    try:
        est = f(_ctx(max(ctx_prec, 16), gmpy2.RoundDown), x)
    except (OverflowError, ValueError):
        return 0
    if not gmpy2.is_finite(est) or gmpy2.is_zero(est):
        return 0
    exp = gmpy2.frexp(est)[0]
    return max(0, exp)


def _point_fn(value, bits: int, fn) -> RealInterval:
    """Evaluate fn at a point both-ways, escalating until the width target."""
    target = Fraction(1, 2**bits)
    prec = bits + GUARD_BITS + _magnitude_guard(16, fn, value)
    for _ in range(_MAX_ESCALATIONS):
        lo = fn(_dn(prec), value)
        hi = fn(_up(prec), value)
        if gmpy2.is_finite(lo) and gmpy2.is_finite(hi):
            iv = RealInterval(lo, hi)
            if iv.width_fraction() <= target:
                return iv
        prec *= 2
    raise PrecisionExhausted(f"point evaluation did not reach 2^-{bits}")


def pi_interval(bits: int) -> RealInterval:
    return _point_fn(None, bits, lambda ctx, _x: ctx.const_pi())


def exp_interval(x: RealInterval, bits: int) -> RealInterval:
    """Enclosure of {e^t : t in x}; exp is monotone so endpoints suffice."""
    lo = _point_fn(x.lo, bits, lambda ctx, v: ctx.exp(v)).lo
    hi = _point_fn(x.hi, bits, lambda ctx, v: ctx.exp(v)).hi
    return RealInterval(lo, hi)


def log_interval(x: RealInterval, bits: int) -> RealInterval:
    """Enclosure of {log t : t in x}; requires x strictly right of 0."""
    if not x.strictly_positive():
        raise DomainError("log of an interval touching (-inf, 0]")
    lo = _point_fn(x.lo, bits, lambda ctx, v: ctx.log(v)).lo
    hi = _point_fn(x.hi, bits, lambda ctx, v: ctx.log(v)).hi
    return RealInterval(lo, hi)


def _trig_interval(x: RealInterval, bits: int, which: str) -> RealInterval:
    """Enclosure of cos or sin over x.

    Interior extrema of cos sit at k*pi, of sin at (k + 1/2)*pi; any k whose
    extremum possibly meets x widens the corresponding side to +-1.
    """
    one = gmpy2.mpfr(1)
    neg_one = gmpy2.mpfr(-1)
    wide = RealInterval(neg_one, one)
    if x.width_fraction() >= 7:
        return wide
    fn = (lambda ctx, v: ctx.cos(v)) if which == "cos" else (lambda ctx, v: ctx.sin(v))
    a = _point_fn(x.lo, bits, fn)
    b = _point_fn(x.hi, bits, fn)
    lo = min(a.lo, b.lo)
    hi = max(a.hi, b.hi)
    pi = pi_interval(max(bits, 32))
    pi_lo, pi_hi = pi.lo_fraction(), pi.hi_fraction()
    xlo, xhi = x.lo_fraction(), x.hi_fraction()
    shift = Fraction(0) if which == "cos" else Fraction(1, 2)
    # conservative integer range for extremum index k
    k_min = int((xlo / pi_hi if xlo >= 0 else xlo / pi_lo) - shift) - 2
    k_max = int((xhi / pi_lo if xhi >= 0 else xhi / pi_hi) - shift) + 2
    for k in range(k_min, k_max + 1):
        t = k + shift
        ext_lo, ext_hi = t * pi_lo, t * pi_hi
        if ext_lo > ext_hi:
            ext_lo, ext_hi = ext_hi, ext_lo
        if ext_lo <= xhi and xlo <= ext_hi:  # extremum possibly inside x
            if which == "cos":
                high = k % 2 == 0
            else:
                high = k % 2 == 0  # sin peaks at pi/2 + 2k*pi
            if high:
                hi = one
            else:
                lo = neg_one
    return RealInterval(lo, hi)


def cos_interval(x: RealInterval, bits: int) -> RealInterval:
    return _trig_interval(x, bits, "cos")


def sin_interval(x: RealInterval, bits: int) -> RealInterval:
    return _trig_interval(x, bits, "sin")


class Box:
    """Complex rectangle: re-interval + i * im-interval."""

    __slots__ = ("re", "im")

    def __init__(self, re: RealInterval, im: RealInterval):
        self.re = re
        self.im = im

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_fractions(cls, re, im=0, prec: int = 64) -> "Box":
        return cls(
            RealInterval.from_fraction(re, prec), RealInterval.from_fraction(im, prec)
        )

    @classmethod
    def point(cls, re, im=0) -> "Box":
        return cls(RealInterval.point(re), RealInterval.point(im))

    @classmethod
    def zero(cls) -> "Box":
        return cls.point(0, 0)

    @classmethod
    def from_corners(cls, re_lo, re_hi, im_lo, im_hi, prec: int = 64) -> "Box":
        return cls(
            RealInterval(mpfr_down(Fraction(re_lo), prec), mpfr_up(Fraction(re_hi), prec)),
            RealInterval(mpfr_down(Fraction(im_lo), prec), mpfr_up(Fraction(im_hi), prec)),
        )

    # -- predicates / views ------------------------------------------------

    def is_real_line(self) -> bool:
        return self.im.is_point() and gmpy2.is_zero(self.im.lo)

    def contains_zero(self) -> bool:
        return self.re.contains_zero() and self.im.contains_zero()

    def contains_gaussian(self, re, im=0) -> bool:
        return self.re.contains_fraction(re) and self.im.contains_fraction(im)

    def overlaps(self, other: "Box") -> bool:
        return self.re.overlaps(other.re) and self.im.overlaps(other.im)

    def contains_box(self, other: "Box") -> bool:
        return self.re.contains_interval(other.re) and self.im.contains_interval(
            other.im
        )

    def inside_interior(self, other: "Box") -> bool:
        return self.re.inside_interior(other.re) and self.im.inside_interior(other.im)

    def mid_fractions(self) -> tuple[Fraction, Fraction]:
        return self.re.mid_fraction(), self.im.mid_fraction()

    def width_fraction(self) -> Fraction:
        return max(self.re.width_fraction(), self.im.width_fraction())

    def width_le(self, bits: int) -> bool:
        return self.re.width_le(bits) and self.im.width_le(bits)

    def corners_fractions(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (
            self.re.lo_fraction(),
            self.re.hi_fraction(),
            self.im.lo_fraction(),
            self.im.hi_fraction(),
        )

    # -- arithmetic -------------------------------------------------------

    def add(self, other: "Box", prec: int) -> "Box":
        return Box(self.re.add(other.re, prec), self.im.add(other.im, prec))

    def sub(self, other: "Box", prec: int) -> "Box":
        return Box(self.re.sub(other.re, prec), self.im.sub(other.im, prec))

    def neg(self) -> "Box":
        return Box(self.re.neg(), self.im.neg())

    def conj(self) -> "Box":
        return Box(self.re, self.im.neg())

    def mul(self, other: "Box", prec: int) -> "Box":
        ac = self.re.mul(other.re, prec)
        bd = self.im.mul(other.im, prec)
        ad = self.re.mul(other.im, prec)
        bc = self.im.mul(other.re, prec)
        return Box(ac.sub(bd, prec), ad.add(bc, prec))

    def div(self, other: "Box", prec: int) -> "Box":
        n = other.abs2(prec)
        if n.contains_zero():
            raise DomainError("division by a box containing 0")
        num = self.mul(other.conj(), prec)
        return Box(num.re.div(n, prec), num.im.div(n, prec))

    def scale_gaussian(self, c, prec: int) -> "Box":
        """Multiply by an exact Gaussian rational coefficient."""
        re = self.re.scale_fraction(c.re, prec).sub(
            self.im.scale_fraction(c.im, prec), prec
        )
        im = self.re.scale_fraction(c.im, prec).add(
            self.im.scale_fraction(c.re, prec), prec
        )
        return Box(re, im)

    def abs2(self, prec: int) -> RealInterval:
        return self.re.square(prec).add(self.im.square(prec), prec)

    def abs_interval(self, prec: int) -> RealInterval:
        return self.abs2(prec).sqrt(prec)

    def intersect(self, other: "Box") -> "Box | None":
        if not self.overlaps(other):
            return None
        return Box(
            RealInterval(max(self.re.lo, other.re.lo), min(self.re.hi, other.re.hi)),
            RealInterval(max(self.im.lo, other.im.lo), min(self.im.hi, other.im.hi)),
        )

    def __repr__(self):
        return f"Box({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.is_real_line():
            return str(self.re)
        return f"{self.re} + i*{self.im}"


def exp_box(z: Box, bits: int) -> Box:
    """Enclosure of e^z = e^Re(z) (cos Im(z) + i sin Im(z))."""
    mag = exp_interval(z.re, bits)
    if z.im.is_point() and gmpy2.is_zero(z.im.lo):
        zero = RealInterval(gmpy2.mpfr(0), gmpy2.mpfr(0))
        return Box(mag, zero)
    prec = bits + GUARD_BITS
    c = cos_interval(z.im, bits)
    s = sin_interval(z.im, bits)
    return Box(mag.mul(c, prec), mag.mul(s, prec))


def log_box(z: Box, bits: int) -> Box:
    """Principal log of a box on the positive real axis."""
    if not z.is_real_line():
        raise DomainError("log is only defined here for positive real boxes")
    zero = RealInterval(gmpy2.mpfr(0), gmpy2.mpfr(0))
    return Box(log_interval(z.re, bits), zero)


def pi_box(bits: int) -> Box:
    zero = RealInterval(gmpy2.mpfr(0), gmpy2.mpfr(0))
    return Box(pi_interval(bits), zero)


def box_arith(op: str, a: Box, b: "Box | None", prec: int) -> Box:
    """Dispatch table mirroring the functional surface of this module."""
    if op == "add":
        return a.add(b, prec)
    if op == "sub":
        return a.sub(b, prec)
    if op == "mul":
        return a.mul(b, prec)
    if op == "div":
        return a.div(b, prec)
    if op == "neg":
        return a.neg()
    if op == "conj":
        return a.conj()
    raise ValueError(f"unknown interval operation {op!r}")
