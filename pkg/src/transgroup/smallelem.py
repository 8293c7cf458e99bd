"""Small nonzero group elements and numeric integer-relation search.

Both searches reduce the integer lattice spanned by coefficient unit
vectors augmented with scaled real/imaginary value columns.  Witnesses
are always re-verified: symbolically where the coordinate system is
complete, by interval separation otherwise.  Absence of a witness is
reported as budget exhaustion, never as a discreteness claim.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from . import elements as E
from . import lattice as lat
from .errors import SearchExhausted
from .intervals import Box

RELATION_GUARD_BITS = 32


class RelationSearchReport:
    """Outcome of an integer-relation search over element values."""

    __slots__ = ("height", "bits", "relation", "certified", "value_box")

    def __init__(self, height: int, bits: int, relation=None,
                 certified: bool = False, value_box: Box | None = None):
        self.height = height
        self.bits = bits
        self.relation = tuple(relation) if relation is not None else None
        self.certified = certified
        self.value_box = value_box

    def __repr__(self):
        if self.relation is None:
            return f"RelationSearchReport(none up to H={self.height})"
        return (f"RelationSearchReport(m={list(self.relation)}, "
                f"certified={self.certified})")


def _value_boxes(values: list["E.Element"], bits: int) -> list[Box]:
    return [v.eval_box(bits) for v in values]


def _build_rows(boxes: list[Box], scale: int) -> tuple[list[list[int]], Fraction, Fraction]:
    """Lattice rows (e_i | scale*Re v_i, scale*Im v_i) with error budgets."""
    k = len(boxes)
    rows = []
    err_re = Fraction(0)
    err_im = Fraction(0)
    for i, b in enumerate(boxes):
        re_mid, im_mid = b.mid_fractions()
        a = round(re_mid * scale)
        c = round(im_mid * scale)
        err_re += scale * b.re.width_fraction() / 2 + Fraction(1, 2)
        err_im += scale * b.im.width_fraction() / 2 + Fraction(1, 2)
        row = [0] * k + [a, c]
        row[i] = 1
        rows.append(row)
    return rows, err_re, err_im


def _proven_height(reduced, k, err_re, err_im) -> int:
    """Largest H such that no integer relation of height <= H can exist.

    A true relation m with |m|_inf <= H maps to a lattice vector of
    squared norm at most k*H^2 + (H*err_re)^2 + (H*err_im)^2; if that is
    below the certified lower bound on lambda_1^2, no such m exists.
    """
    lb = lat.shortest_vector_lower_bound(reduced)
    denom = k + err_re * err_re + err_im * err_im
    bound = lb / denom
    if bound <= 1:
        return 0
    return isqrt(int(bound) - 1) if int(bound) >= 1 else 0


def relation_search(values: list["E.Element"], height: int,
                    bits: int) -> RelationSearchReport:
    """Search for integer m, |m|_inf <= height, with sum m_j v_j = 0.

    Returns either a candidate relation (certified when the symbolic
    zero test confirms it) or a no-relation report whose height field is
    the bound up to which absence is rigorously excluded.
    """
    k = len(values)
    if k == 0:
        return RelationSearchReport(height, bits)
    for i, v in enumerate(values):
        if v.is_zero().is_true():
            m = [0] * k
            m[i] = 1
            return RelationSearchReport(height, bits, relation=m, certified=True,
                                        value_box=v.eval_box(bits))
    if k == 1:
        # m*v = 0 with m != 0 would force v = 0, ruled out above; for a
        # semi-decided v (LogAlg) the exclusion height stays 0
        proven = height if values[0].is_zero().is_false() else 0
        return RelationSearchReport(proven, bits)
    boxes = _value_boxes(values, bits)
    scale = 2 ** max(16, bits - RELATION_GUARD_BITS)
    rows, err_re, err_im = _build_rows(boxes, scale)
    reduced = lat.lll_reduce(rows)
    prec = bits + 16
    for row in reduced:
        m = row[:k]
        if not any(m) or max(abs(x) for x in m) > height:
            continue
        combo = _combine_elements(values, m)
        box = combo.eval_box(bits)
        if not box.contains_zero():
            continue
        iz = combo.is_zero()
        if iz.is_false():
            continue
        return RelationSearchReport(height, bits, relation=m,
                                    certified=iz.is_true(), value_box=box)
    proven = min(height, _proven_height(reduced, k, err_re, err_im))
    return RelationSearchReport(proven, bits)


def _combine_elements(values, m) -> "E.Element":
    total = E.zero_element()
    for mj, v in zip(m, values):
        if mj:
            total = total + v.scale(mj)
    return total


def small_element(G, eps, height_cap: int = 10**9,
                  max_bits: int = 1024) -> "E.Element":
    """A nonzero element of G with certified |value| < eps.

    Strategy: LLL on the coefficient lattice augmented with value columns
    scaled to ~1/eps, retried with doubled precision and scale.  Raises
    SearchExhausted when the budget runs out; that never proves
    discreteness.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    gens = list(G.generators)
    k = len(gens)
    if k == 0:
        raise SearchExhausted("the trivial group has no nonzero elements",
                              height_cap)
    # any single generator may already qualify
    for i in range(k):
        cand = _check_candidate(gens, _unit(k, i), eps, 128)
        if cand is not None:
            return cand
    # scale ladder starting near 1/eps keeps witness heights small
    base = max(int(8 / eps) + 1, 16)
    for attempt in range(512):
        scale = base << (2 * attempt)
        bits = max(128, scale.bit_length() + 64)
        if bits > max_bits:
            break
        boxes = _value_boxes(gens, bits)
        rows, _, _ = _build_rows(boxes, scale)
        reduced = lat.lll_reduce(rows)
        for m in _candidate_coefficients(reduced, k):
            if max(abs(x) for x in m) > height_cap:
                continue
            cand = _check_candidate(gens, m, eps, bits)
            if cand is not None:
                return cand
    raise SearchExhausted(
        f"no nonzero element below {eps} found within the budget", height_cap
    )


def _candidate_coefficients(reduced, k):
    """Reduced rows plus small combinations of the two shortest, ranked by
    the scaled value column."""
    rows = [row for row in reduced if any(row[:k])]
    rows.sort(key=lambda row: row[k] * row[k] + row[k + 1] * row[k + 1])
    cands = [row[:k] for row in rows]
    if len(rows) >= 2:
        r1, r2 = rows[0], rows[1]
        extra = []
        for c1 in range(-3, 4):
            for c2 in range(-3, 4):
                if not (c1 or c2) or (abs(c1) <= 1 and c2 == 0) or (c1 == 0 and abs(c2) <= 1):
                    continue
                vec = [c1 * a + c2 * b for a, b in zip(r1, r2)]
                if any(vec[:k]):
                    extra.append(vec)
        extra.sort(key=lambda row: row[k] * row[k] + row[k + 1] * row[k + 1])
        cands.extend(row[:k] for row in extra)
    seen = set()
    out = []
    for m in cands:
        key = tuple(m)
        if key in seen or tuple(-x for x in m) in seen:
            continue
        seen.add(key)
        out.append(list(m))
    return out


def _unit(k, i):
    m = [0] * k
    m[i] = 1
    return m


def _check_candidate(gens, m, eps, bits) -> "E.Element | None":
    x = _combine_elements(gens, m)
    iz = x.is_zero()
    if iz.is_true():
        return None
    box = x.eval_box(bits)
    if iz.is_unknown() and box.contains_zero():
        return None  # cannot certify nonzero-ness
    mag = box.abs_interval(bits + 8)
    if Fraction(*mag.hi.as_integer_ratio()) < eps:
        return x
    return None
