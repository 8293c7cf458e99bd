"""Topological classification of finitely generated groups.

A finitely generated subgroup of the plane is discrete exactly when its
rational rank equals the real dimension of its span (a rational basis of
rank r spanning an r-dimensional real space generates a lattice; a rank
deficit forces accumulation).  Countable non-discrete groups are
homeomorphic to the rationals, which yields the trichotomy: trivial,
discrete Z, discrete ZxZ, or Q-like.

Discrete verdicts carry a minimal-norm certificate (exact Gauss-Lagrange
over the Gaussian rationals for abstract lattices, interval-certified
reduction otherwise); Q-like verdicts carry a small-element witness.
"""

from __future__ import annotations

from fractions import Fraction

from . import algebraic as alg
from . import elements as E
from . import groups as G_mod
from . import lattice as lat
from . import symbols as S
from .errors import NotDiscrete, PrecisionExhausted, SearchExhausted, UnboundSymbol
from .intervals import RealInterval
from .rationals import GaussianRational
from .verdicts import UnknownReason

SPAN_REFUTE_BITS = 512
DEFAULT_WITNESS_EPS = Fraction(1, 1000)


class TopologyClass:
    TRIVIAL = "Trivial"
    Z = "Z"
    ZXZ = "ZxZ"
    QLIKE = "QLike"
    UNKNOWN = "Unknown"

    __slots__ = ("tag", "rank", "span", "min_norm", "min_norm_coeff",
                 "witness", "witness_box", "reason")

    def __init__(self, tag, rank=None, span=None, min_norm=None,
                 min_norm_coeff=None, witness=None, witness_box=None,
                 reason=None):
        self.tag = tag
        self.rank = rank
        self.span = span
        self.min_norm = min_norm          # RealInterval or None
        self.min_norm_coeff = min_norm_coeff
        self.witness = witness            # Element or None
        self.witness_box = witness_box
        self.reason = reason

    def __repr__(self):
        return f"TopologyClass({self.tag}, rank={self.rank}, span={self.span})"


# ---------------------------------------------------------------------------
# Real span dimension
# ---------------------------------------------------------------------------


def _exp_im_part_equal(s1: S.ExpSymbol, s2: S.ExpSymbol) -> bool:
    """Im a1 == Im a2, exactly."""
    return alg.im_is_zero(alg.sub(s1.exponent, s2.exponent))


def _single_term_collinear(t1, t2) -> bool | None:
    """Exact collinearity for one-term elements.

    The direction of c * s is c itself when s is real-valued, and picks
    up the phase e^(i Im a) for s = exp(a).  A nonzero algebraic phase
    difference can never be cancelled by a Gaussian-rational rotation
    (that would make e^(i*delta) algebraic, against Lindemann), so the
    test reduces to exact checks on exponents and coefficients.
    """
    (s1, c1), (s2, c2) = t1, t2
    real1, real2 = s1.is_real_valued(), s2.is_real_valued()
    twisted1 = isinstance(s1, S.ExpSymbol) and not real1
    twisted2 = isinstance(s2, S.ExpSymbol) and not real2
    if real1 and real2:
        return (c1 * c2.conjugate()).im == 0
    if twisted1 and twisted2:
        if _exp_im_part_equal(s1, s2):
            return (c1 * c2.conjugate()).im == 0
        return False
    if (real1 and twisted2) or (real2 and twisted1):
        return False  # a twisted exponential against a real direction
    return None  # some complex abstract symbol without realness promise


def _collinear(x: "E.Element", y: "E.Element") -> bool | None:
    """True/False when provable, None when undecided."""
    xr, yr = x.is_real_provable(), y.is_real_provable()
    if xr and yr:
        return True
    xi, yi = x.is_imaginary_provable(), y.is_imaginary_provable()
    if xi and yi:
        return True
    if (xr and yi) or (xi and yr):
        return False
    t1, t2 = x.single_term(), y.single_term()
    if t1 is not None and t2 is not None:
        decided = _single_term_collinear(t1, t2)
        if decided is not None:
            return decided
    # interval refutation: Im(x * conj(y)) bounded away from 0
    bits = 128
    while bits <= SPAN_REFUTE_BITS:
        try:
            bx, by = x.eval_box(bits), y.eval_box(bits)
        except UnboundSymbol:
            return None
        prec = bits + 8
        cross = bx.im.mul(by.re, prec).sub(bx.re.mul(by.im, prec), prec)
        if not cross.contains_zero():
            return False
        bits *= 2
    return None


def span_dim(G) -> int | None:
    """Real dimension of the span of the generator values; None = unknown."""
    nonzero = []
    undecided = 0
    for g in G.generators:
        iz = g.is_zero()
        if iz.is_true():
            continue
        if iz.is_unknown():
            undecided += 1
            continue
        nonzero.append(g)
    if not nonzero:
        return 0 if not undecided else None
    pair_results = {}
    for i in range(len(nonzero)):
        for j in range(i + 1, len(nonzero)):
            r = _collinear(nonzero[i], nonzero[j])
            if r is False:
                return 2
            pair_results[(i, j)] = r
    base_ok = all(
        pair_results.get((0, j)) is True for j in range(1, len(nonzero))
    )
    if base_ok and not undecided:
        return 1
    return None


# ---------------------------------------------------------------------------
# Minimal norms for discrete groups
# ---------------------------------------------------------------------------


def _abs2_box(x: "E.Element", bits: int):
    b = x.eval_box(bits)
    return b.abs2(bits + 8)


def _exp_pieces(x: "E.Element"):
    """[(exponent | None, Gaussian coeff)] with None meaning e^0 = 1.

    Returns None unless every term is an exponential with a
    Gaussian-rational coefficient and the algebraic part is Gaussian.
    """
    pieces = []
    part = x.alg_part.as_gaussian()
    if part is None:
        return None
    if not part.is_zero():
        pieces.append((None, part))
    for sym, c in x.terms:
        if not isinstance(sym, S.ExpSymbol):
            return None
        pieces.append((sym.exponent, c))
    return pieces


def _products_vanish(spec) -> bool | None:
    """Exact zero test for sums of q * x * conj(y) over exp-family elements.

    Expanding the products gives a Gaussian-rational combination of
    e^(a_i + conj(a_j)); by Lindemann-Weierstrass it vanishes exactly
    when every grouped coefficient does.  Returns None when some factor
    leaves the exponential framework.
    """
    entries = []
    for x, y, q in spec:
        px, py = _exp_pieces(x), _exp_pieces(y)
        if px is None or py is None:
            return None
        for ax, cx in px:
            for ay, cy in py:
                coeff = cx * cy.conjugate() * q
                if coeff.is_zero():
                    continue
                if ax is None and ay is None:
                    gamma = None
                elif ax is None:
                    gamma = alg.conj(ay)
                elif ay is None:
                    gamma = ax
                else:
                    gamma = alg.add(ax, alg.conj(ay))
                    if gamma.is_zero():
                        gamma = None
                entries.append((gamma, coeff))
    groups: list[list] = []
    for gamma, coeff in entries:
        for slot in groups:
            g0 = slot[0]
            if gamma is None and g0 is None:
                slot[1] = slot[1] + coeff
                break
            if (gamma is not None and g0 is not None
                    and gamma.box().overlaps(g0.box())
                    and alg.equals(gamma, g0)):
                slot[1] = slot[1] + coeff
                break
        else:
            groups.append([gamma, coeff])
    return all(c.is_zero() for _, c in groups)


def _norms_equal_exact(x: "E.Element", y: "E.Element") -> bool | None:
    """|x| == |y| decided exactly for same-symbol and exp-pair lattices."""
    t1, t2 = x.single_term(), y.single_term()
    if t1 is None or t2 is None:
        return None
    (s1, c1), (s2, c2) = t1, t2
    if s1 is s2:
        return c1.norm2() == c2.norm2()
    if isinstance(s1, S.ExpSymbol) and isinstance(s2, S.ExpSymbol):
        # norms are |c| e^(Re a): equal iff the Re parts agree and the
        # coefficient moduli agree, since e^(nonzero algebraic) is not
        # algebraic, let alone rational
        diff = alg.sub(
            alg.add(s1.exponent, alg.conj(s1.exponent)),
            alg.add(s2.exponent, alg.conj(s2.exponent)),
        )
        if diff.is_zero():
            return c1.norm2() == c2.norm2()
        return False
    return None


def _norm_less(x, y, max_bits: int = 4096) -> bool:
    """|x| < |y|, by interval with exact-equality fallbacks."""
    bits = 64
    while bits <= max_bits:
        nx, ny = _abs2_box(x, bits), _abs2_box(y, bits)
        if nx.hi < ny.lo:
            return True
        if ny.hi < nx.lo:
            return False
        eq = _norms_equal_exact(x, y)
        if eq is True:
            return False
        if eq is None and bits >= 256:
            # |x|^2 - |y|^2 as an exact exponential combination
            same = _products_vanish([(x, x, GaussianRational(1)),
                                     (y, y, GaussianRational(-1))])
            if same is True:
                return False
        bits *= 2
    raise PrecisionExhausted("norm comparison did not separate")


def _round_mu(x, y, max_bits: int = 4096) -> int:
    """round(<x, y> / |y|^2) with interval certification of the rounding.

    A persistent straddle of a half-integer k - 1/2 is resolved exactly:
    2<x,y> = (2k-1)|y|^2 expands to an exponential combination whose
    vanishing is decidable; on an exact tie either rounding is a valid
    reduction and floor(. + 1/2) is taken.
    """
    bits = 128
    tested: set[int] = set()
    while bits <= max_bits:
        prec = bits + 8
        bx, by = x.eval_box(bits), y.eval_box(bits)
        ip = bx.mul(by.conj(), prec).re
        n2 = by.abs2(prec)
        ratio = ip.div(n2, prec)
        lo, hi = ratio.lo_fraction(), ratio.hi_fraction()
        kl = _round_half_even_safe(lo)
        kh = _round_half_even_safe(hi)
        if kl == kh:
            return kl
        if kl + 1 == kh and bits >= 512:
            half2 = 2 * kh - 1  # the straddled boundary is kh - 1/2
            if half2 not in tested:
                tested.add(half2)
                tie = _products_vanish([
                    (x, y, GaussianRational(1)),
                    (y, x, GaussianRational(1)),
                    (y, y, GaussianRational(-half2)),
                ])
                if tie is True:
                    return kh
        bits *= 2
    # exact rational ratio for same-symbol pairs
    tx, ty = x.single_term(), y.single_term()
    if tx is not None and ty is not None and tx[0] is ty[0]:
        cx, cy = tx[1], ty[1]
        exact = (cx * cy.conjugate()).re / cy.norm2()
        return _round_half_even_safe(exact)
    raise PrecisionExhausted("Gauss-Lagrange rounding did not separate")


def _round_half_even_safe(q: Fraction) -> int:
    from math import floor

    return floor(q + Fraction(1, 2))


def _gauss_lagrange(u1: "E.Element", u2: "E.Element"):
    """2D lattice reduction on element values; u1 comes out shortest."""
    if _norm_less(u2, u1):
        u1, u2 = u2, u1
    for _ in range(64):
        mu = _round_mu(u2, u1)
        if mu:
            u2 = u2 - u1.scale(mu)
        if _norm_less(u2, u1):
            u1, u2 = u2, u1
        else:
            return u1, u2
    raise PrecisionExhausted("Gauss-Lagrange did not terminate")


def _abstract_lattice_min(G) -> tuple[GaussianRational, "E.Element"] | None:
    """Exact shortest vector for lattices c_j * T over one real symbol."""
    syms = set()
    coeffs = []
    for g in G.generators:
        t = g.single_term()
        if t is None:
            return None
        syms.add(id(t[0]))
        coeffs.append(t[1])
        sym = t[0]
    if len(syms) != 1:
        return None
    basis = lat.primitive_span_basis(
        [[c.re, c.im] for c in coeffs]
    )
    vecs = [GaussianRational(b[0], b[1]) for b in basis]
    if len(vecs) == 1:
        best = vecs[0]
    else:
        v1, v2 = vecs
        for _ in range(128):
            if v2.norm2() < v1.norm2():
                v1, v2 = v2, v1
            mu_num = (v2 * v1.conjugate()).re / v1.norm2()
            mu = int((mu_num + Fraction(1, 2)).__floor__())
            if mu == 0:
                break
            v2 = v2 - v1 * mu
        else:
            raise PrecisionExhausted("rational Gauss-Lagrange loop")
        best = v1 if v1.norm2() <= v2.norm2() else v2
    witness = E.make_element(None, [(sym, best)])
    return best, witness


def min_norm(G, bound: int = 100, bits: int = 128) -> RealInterval:
    """Enclosure of min{|g| : g in G, g != 0} for a discrete group.

    `bound` cross-checks the reduced answer against direct enumeration of
    small coefficient combinations of the reduced basis.
    """
    cls = classify(G, with_witness=False)
    if cls.tag not in (TopologyClass.Z, TopologyClass.ZXZ):
        raise NotDiscrete(f"min_norm needs a discrete group, got {cls.tag}")
    shortest = _shortest_element(G, cls.tag)
    box = shortest.eval_box(bits)
    enclosure = box.abs_interval(bits + 8)
    _sanity_check_minimal(G, shortest, min(bound, 8), bits)
    return enclosure


def _shortest_element(G, tag: str) -> "E.Element":
    exact = _abstract_lattice_min(G)
    if exact is not None:
        return exact[1]
    coords = G.coords()
    basis_rows = lat.primitive_span_basis(coords.full_rows)
    els = [
        coords.element_from_row(r[:-2], GaussianRational(r[-2], r[-1]))
        for r in basis_rows
    ]
    if tag == TopologyClass.Z:
        return els[0]
    u1, _u2 = _gauss_lagrange(els[0], els[1])
    return u1


def _sanity_check_minimal(G, shortest, bound, bits):
    """No small combination of the primitive basis may beat the answer."""
    coords = G.coords()
    rows = lat.primitive_span_basis(coords.full_rows)
    els = [
        coords.element_from_row(r[:-2], GaussianRational(r[-2], r[-1]))
        for r in rows
    ]
    target = _abs2_box(shortest, bits)
    import itertools

    for combo in itertools.product(range(-bound, bound + 1), repeat=len(els)):
        if not any(combo):
            continue
        x = E.zero_element()
        for c, e in zip(combo, els):
            if c:
                x = x + e.scale(c)
        nb = _abs2_box(x, bits)
        if nb.hi < target.lo:
            raise AssertionError(
                "minimal-norm certificate beaten by enumeration; this is a bug"
            )


# ---------------------------------------------------------------------------
# The trichotomy
# ---------------------------------------------------------------------------


def _rank_trustworthy(G) -> bool:
    """When the formal coordinate rank provably equals the value rank.

    True within a single certifiable family with Gaussian-rational
    algebraic parts.  Across families it would assume open conjectures
    (is the rank of gp{e, pi} really 2?), so mixed groups fall back to
    interval-provable facts and otherwise stay Unknown.
    """
    coords = G.coords()
    return (not coords.has_logalg and coords.all_gauss
            and len(G.families()) <= 1)


def classify(G, witness_eps: Fraction = DEFAULT_WITNESS_EPS,
             with_witness: bool = True) -> TopologyClass:
    """Trivial / Z / ZxZ / QLike per the discreteness criterion rank = span."""
    rank = G_mod.rank_q(G)
    if rank.exact and rank.rank == 0:
        # coordinate rank 0 means every generator is the zero element
        return TopologyClass(TopologyClass.TRIVIAL, rank=rank, span=0)
    d = span_dim(G)
    if rank.exact and _rank_trustworthy(G):
        r = rank.rank
        if d is not None and d > r:
            raise AssertionError("span dimension exceeded rational rank")
        if r > 2:
            return _qlike(G, rank, d, witness_eps, with_witness)
        if r == 1:
            # 1 <= span <= rank forces span 1
            return _discrete(G, rank, 1, TopologyClass.Z)
        # r == 2
        if d == 2:
            return _discrete(G, rank, 2, TopologyClass.ZXZ)
        if d == 1:
            return _qlike(G, rank, d, witness_eps, with_witness)
        return TopologyClass(TopologyClass.UNKNOWN, rank=rank, span=d,
                             reason=UnknownReason.PRECISION_LIMIT)
    return _classify_untrusted(G, rank, d, witness_eps, with_witness)


def _classify_untrusted(G, rank, d, witness_eps, with_witness) -> TopologyClass:
    """Mixed-family / LogAlg groups: only interval-provable verdicts."""
    nonzero_boxes = []
    all_zero = True
    for g in G.generators:
        iz = g.is_zero()
        if iz.is_true():
            continue
        all_zero = False
        try:
            box = g.eval_box(256)
        except UnboundSymbol:
            box = None
        if box is not None and not box.contains_zero():
            nonzero_boxes.append(box)
    if all_zero:
        return TopologyClass(TopologyClass.TRIVIAL, rank=rank, span=0)
    reason = (UnknownReason.MULTIPLICATIVE_RELATION_POSSIBLE
              if G.has_logalg() else UnknownReason.SCHANUEL_CONDITIONAL)
    if len(G.generators) == 1:
        if nonzero_boxes:
            # any single nonzero complex number generates a discrete Z
            return _discrete(G, G_mod.RankResult(True, 1), 1, TopologyClass.Z)
        return TopologyClass(TopologyClass.UNKNOWN, rank=rank, span=d,
                             reason=reason)
    if (d == 2 and rank.exact and rank.rank == 2
            and G_mod._interval_real_rank(G) == 2):
        # value rank: at most the formal 2, at least the proven real 2
        return _discrete(G, rank, 2, TopologyClass.ZXZ)
    return TopologyClass(TopologyClass.UNKNOWN, rank=rank, span=d,
                         reason=reason)


def _discrete(G, rank, d, tag) -> TopologyClass:
    coeff = None
    enclosure = None
    exact = _abstract_lattice_min(G)
    try:
        if exact is not None:
            coeff, shortest = exact
        else:
            shortest = _shortest_element(G, tag)
        enclosure = shortest.eval_box(128).abs_interval(136)
    except UnboundSymbol:
        pass  # exact lattice data may exist without a numeric binding
    return TopologyClass(tag, rank=rank, span=d, min_norm=enclosure,
                         min_norm_coeff=coeff)


def _qlike(G, rank, d, witness_eps, with_witness) -> TopologyClass:
    witness = None
    wbox = None
    if with_witness:
        from .smallelem import small_element

        try:
            witness = small_element(G, witness_eps)
            wbox = witness.eval_box(256)
        except (SearchExhausted, UnboundSymbol):
            witness = None
    return TopologyClass(TopologyClass.QLIKE, rank=rank, span=d,
                         witness=witness, witness_box=wbox)
