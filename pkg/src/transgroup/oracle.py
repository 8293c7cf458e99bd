"""Exhaustive brute-force oracles.

These deliberately avoid the group/lattice machinery they ground-truth:
coordinates are re-derived locally from canonical elements, and every
question is settled by enumerating coefficient vectors, deciding with
exact integers or interval arithmetic.  Clarity beats speed throughout.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import lcm

import numpy as np

from . import elements as E
from .errors import BudgetExceeded
from .rationals import GaussianRational

CANDIDATE_GUARD = 10**8


class EnumerationSpec:
    """Coefficient box |m_j| <= bound over the given generators."""

    __slots__ = ("generators", "bound", "bits")

    def __init__(self, generators, bound: int, bits: int = 128):
        if bound < 1:
            raise ValueError("bound must be >= 1")
        self.generators = tuple(generators)
        self.bound = bound
        self.bits = bits
        k = len(self.generators)
        if k and (2 * bound + 1) ** k > CANDIDATE_GUARD:
            raise BudgetExceeded(
                f"(2*{bound}+1)^{k} candidates exceed the enumeration guard"
            )


class BruteMember:
    __slots__ = ("found", "coeffs", "bound")

    def __init__(self, found: bool, coeffs=None, bound: int = 0):
        self.found = found
        self.coeffs = tuple(coeffs) if coeffs is not None else None
        self.bound = bound

    def __repr__(self):
        if self.found:
            return f"BruteMember(yes, {list(self.coeffs)})"
        return f"BruteMember(not found up to {self.bound})"


def _exact_coordinate_rows(gens, extra=()):
    """Integer coordinate rows for gens (+extra) or None if unavailable.

    Built locally from canonical element data so the oracle shares no
    code with the lattice algebra it validates.
    """
    import functools

    from . import symbols as S

    everything = list(gens) + list(extra)
    parts = []
    for g in everything:
        if g.has_logalg():
            return None
        p = g.alg_part.as_gaussian()
        if p is None:
            return None
        parts.append(p)
    seen = {}
    for g in everything:
        for sym, _ in g.terms:
            seen.setdefault(id(sym), sym)
    symbols = sorted(seen.values(), key=functools.cmp_to_key(S.compare_symbols))
    rows = []
    for g, p in zip(everything, parts):
        row = []
        for sym in symbols:
            c = g.coefficient(sym)
            row.extend((c.re, c.im))
        row.extend((p.re, p.im))
        rows.append(row)
    ncols = len(rows[0])
    mults = [lcm(*(Fraction(r[j]).denominator for r in rows)) if rows else 1
             for j in range(ncols)]
    return [[int(Fraction(r[j]) * mults[j]) for j in range(ncols)] for r in rows]


def brute_member(G, x, bound: int) -> BruteMember:
    """Exhaustive membership over all |m_j| <= bound, lexicographic scan."""
    gens = list(G.generators)
    EnumerationSpec(gens, bound)
    k = len(gens)
    if k == 0:
        if x.is_zero().is_true():
            return BruteMember(True, ())
        return BruteMember(False, bound=bound)
    cleared = _exact_coordinate_rows(gens, extra=[x])
    if cleared is not None:
        rows = np.array(cleared[:-1], dtype=object)
        target = np.array(cleared[-1], dtype=object)
        width = 2 * bound + 1
        maxval = int(np.abs(rows.astype(float)).max() if rows.size else 0)
        use_int64 = maxval * bound * k < 2**62
        if use_int64:
            rows = rows.astype(np.int64)
            target = target.astype(np.int64)
        chunk = 1 << 16
        total = width**k
        strides = [width**i for i in range(k)]
        for start in range(0, total, chunk):
            stop = min(start + chunk, total)
            idx = np.arange(start, stop)
            ms = np.empty((stop - start, k), dtype=rows.dtype)
            for j in range(k):
                ms[:, j] = (idx // strides[k - 1 - j]) % width - bound
            sums = ms @ rows
            hits = np.where((sums == target).all(axis=1))[0]
            if hits.size:
                m = [int(v) for v in ms[hits[0]]]
                return BruteMember(True, m)
        return BruteMember(False, bound=bound)
    # element-equality fallback (slow; used for irrational algebraic parts)
    for m in product(range(-bound, bound + 1), repeat=k):
        total_el = E.zero_element()
        for mj, g in zip(m, gens):
            if mj:
                total_el = total_el + g.scale(mj)
        if total_el == x:
            return BruteMember(True, m)
    return BruteMember(False, bound=bound)


def _candidate_values(gens, bound: int, bits: int):
    """Interval value of every m in scan order, via cached partial sums."""
    k = len(gens)
    boxes = [g.eval_box(bits) for g in gens]
    prec = bits + 8
    scaled = []
    for b in boxes:
        per = {}
        for m in range(-bound, bound + 1):
            per[m] = b.scale_gaussian(GaussianRational(m), prec)
        scaled.append(per)
    for m in product(range(-bound, bound + 1), repeat=k):
        total = scaled[0][m[0]]
        for j in range(1, k):
            total = total.add(scaled[j][m[j]], prec)
        yield m, total


def brute_min_norm(G, bound: int, bits: int = 128):
    """(m, |value| enclosure) minimizing |value| over nonzero m.

    The reported vector is the first in scan order whose enclosure's lower
    end is minimal among candidates overlapping the global minimum.
    """
    gens = list(G.generators)
    EnumerationSpec(gens, bound, bits)
    if not gens:
        raise ValueError("trivial group has no nonzero elements")
    prec = bits + 8
    best = None  # (hi, m, interval)
    candidates = []
    for m, box in _candidate_values(gens, bound, bits):
        if not any(m):
            continue
        a = box.abs_interval(prec)
        candidates.append((m, a))
        if best is None or a.hi < best[0]:
            best = (a.hi, m, a)
    cutoff = best[0]
    for m, a in candidates:
        if a.lo <= cutoff:
            return m, a
    raise AssertionError("unreachable")


def brute_small(G, eps, bound: int, bits: int = 128):
    """First m in scan order with certified 0 < |value| < eps, or None."""
    eps = Fraction(eps)
    gens = list(G.generators)
    EnumerationSpec(gens, bound, bits)
    prec = bits + 8
    for m, box in _candidate_values(gens, bound, bits):
        if not any(m):
            continue
        a = box.abs_interval(prec)
        if not Fraction(*a.hi.as_integer_ratio()) < eps:
            continue
        combo = E.zero_element()
        for mj, g in zip(m, gens):
            if mj:
                combo = combo + g.scale(mj)
        iz = combo.is_zero()
        if iz.is_false() or (iz.is_unknown() and not box.contains_zero()):
            return m, a
    return None
