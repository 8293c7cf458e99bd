"""Integer polynomial helpers for the algebraic-number kernel.

Polynomials are tuples of ints, lowest degree first; () is the zero
polynomial.  Canonical form: no trailing zero, content 1, positive
leading coefficient.  Resultant composition, squarefree parts and gcds
are delegated to sympy; shifts, scalings and evaluations are done
directly on coefficient lists.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import sympy

from .errors import DegreeOverflow, ZeroPolynomial
from .intervals import Box
from .rationals import GaussianRational

DEGREE_CAP = 4096

_x, _y = sympy.symbols("x y")


def strip(coeffs) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: tuple[int, ...]) -> int:
    return len(p) - 1


def normalize(coeffs) -> tuple[int, ...]:
    """Canonical integer polynomial: content 1, leading coefficient > 0."""
    p = strip(coeffs)
    if not p:
        raise ZeroPolynomial("the zero polynomial is not allowed here")
    g = 0
    for c in p:
        g = gcd(g, c)
    if p[-1] < 0:
        g = -g
    return tuple(c // g for c in p)


def derivative(p: tuple[int, ...]) -> tuple[int, ...]:
    return strip(k * c for k, c in enumerate(p) if k)


def eval_fraction(p, v: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * v + c
    return acc


def eval_gaussian(p, v: GaussianRational) -> GaussianRational:
    acc = GaussianRational(0)
    for c in reversed(p):
        acc = acc * v + GaussianRational(c)
    return acc


def eval_box(p, z: Box, prec: int) -> Box:
    """Interval Horner evaluation over a complex box."""
    acc = Box.point(0, 0)
    for c in reversed(p):
        acc = acc.mul(z, prec).add(Box.point(c), prec)
    return acc


def _to_expr(p, var):
    return sum(c * var**k for k, c in enumerate(p))


def _from_expr(expr) -> tuple[int, ...]:
    poly = sympy.Poly(expr, _x)
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    return strip(coeffs)


@lru_cache(maxsize=4096)
def sqf_part(p: tuple[int, ...]) -> tuple[int, ...]:
    """Squarefree part, canonicalized."""
    p = normalize(p)
    if degree(p) <= 1:
        return p
    poly = sympy.Poly(list(reversed(p)), _x)
    return normalize(int(c) for c in reversed(poly.sqf_part().all_coeffs()))


def is_squarefree(p: tuple[int, ...]) -> bool:
    return sqf_part(p) == normalize(p)


def _check_cap(d: int):
    if d > DEGREE_CAP:
        raise DegreeOverflow(f"resultant output degree {d} exceeds cap {DEGREE_CAP}")


@lru_cache(maxsize=4096)
def annihilator_sum(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Polynomial vanishing on {a + b : p(a) = 0, q(b) = 0} (squarefree)."""
    _check_cap(degree(p) * degree(q))
    py = _to_expr(p, _y)
    qxy = sum(c * (_x - _y) ** k for k, c in enumerate(q))
    res = sympy.resultant(py, qxy, _y)
    return sqf_part(_from_expr(sympy.expand(res)))


@lru_cache(maxsize=4096)
def annihilator_product(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Polynomial vanishing on {a * b}; callers must rule out zero operands.

    Factors x^k are stripped first so y^deg(q) * q(x/y) keeps no spurious
    y = 0 interaction.
    """
    while p and p[0] == 0:
        p = p[1:]
    while q and q[0] == 0:
        q = q[1:]
    p, q = strip(p), strip(q)
    if not p or not q:
        raise ZeroPolynomial("product annihilator of an empty root set")
    _check_cap(degree(p) * degree(q))
    py = _to_expr(p, _y)
    dq = degree(q)
    qxy = sum(c * _x**k * _y ** (dq - k) for k, c in enumerate(q))
    res = sympy.resultant(py, qxy, _y)
    return sqf_part(_from_expr(sympy.expand(res)))


def negate_roots(p: tuple[int, ...]) -> tuple[int, ...]:
    """p(-x): annihilates {-a}."""
    return normalize(
        tuple(c if k % 2 == 0 else -c for k, c in enumerate(p))
    )


def _gaussian_poly_mul(a, b):
    out = [GaussianRational(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca.is_zero():
            continue
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return out


def _gaussian_shift(p, g: GaussianRational):
    """Coefficients of p(x - g) over the Gaussian rationals."""
    acc = [GaussianRational(0)]
    lin = [-g, GaussianRational(1)]  # (x - g)
    for c in reversed(p):
        acc = _gaussian_poly_mul(acc, lin)
        acc[0] = acc[0] + GaussianRational(c)
    return acc


def _clear_real(coeffs) -> tuple[int, ...]:
    """Gaussian coefficients known to be real -> canonical integer poly."""
    for c in coeffs:
        if c.im:
            raise AssertionError("expected real coefficients")
    den = 1
    for c in coeffs:
        den = den * c.re.denominator // gcd(den, c.re.denominator)
    return normalize(tuple(int(c.re * den) for c in coeffs))


def shift_roots_by_gaussian(p: tuple[int, ...], g: GaussianRational) -> tuple[int, ...]:
    """Annihilator of {a + g : p(a) = 0}, g an exact Gaussian rational."""
    shifted = _gaussian_shift(p, g)
    if g.is_real():
        return _clear_real(shifted)
    other = _gaussian_shift(p, g.conjugate())
    prod = _gaussian_poly_mul(shifted, other)
    return sqf_part(_clear_real(prod))


def scale_roots_by_gaussian(p: tuple[int, ...], g: GaussianRational) -> tuple[int, ...]:
    """Annihilator of {g * a : p(a) = 0}, g a nonzero Gaussian rational."""
    if g.is_zero():
        raise ZeroDivisionError("scaling roots by zero")

    def scaled(gg):
        # p(x / gg), coefficient k divided by gg^k
        out = []
        power = GaussianRational(1)
        for c in p:
            out.append(GaussianRational(c) / power)
            power = power * gg
        return out

    a = scaled(g)
    if g.is_real():
        return _clear_real(a)
    b = scaled(g.conjugate())
    return sqf_part(_clear_real(_gaussian_poly_mul(a, b)))


def factorint(n: int) -> dict[int, int]:
    return {int(p): int(e) for p, e in sympy.factorint(n).items()}


def isprime(n: int) -> bool:
    return bool(sympy.isprime(n))


@lru_cache(maxsize=8192)
def gcd_poly(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical gcd; its roots are exactly the common roots of p and q."""
    g = sympy.gcd(
        sympy.Poly(list(reversed(p)), _x), sympy.Poly(list(reversed(q)), _x)
    )
    coeffs = [int(c) for c in reversed(sympy.Poly(g, _x).all_coeffs())]
    return normalize(coeffs)


def common_roots_possible(p: tuple[int, ...], q: tuple[int, ...]) -> bool:
    """gcd degree > 0 test, used by equality fast paths."""
    return degree(gcd_poly(p, q)) > 0
