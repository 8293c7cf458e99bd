"""Finitely generated subgroups gp{g1, ..., gk} of the complex numbers.

A group owns its generators' exact rational coordinate matrix over the
inferred symbol basis (two real columns per symbol, plus two for
Gaussian-rational algebraic parts).  Certification computes the integer
kernel of the symbol coordinates by Hermite normal form and evaluates
the algebraic-part functional exactly on each kernel vector, so every
refutation witness replays unconditionally, even when algebraic parts
are irrational.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from . import algebraic as alg
from . import elements as E
from . import lattice as lat
from . import symbols as S
from .errors import (
    DuplicateExponent,
    NonPositiveLogArgument,
    ZeroExponent,
    ZeroInput,
)
from .rationals import GaussianRational
from .verdicts import UnknownReason

DEFAULT_RELATION_HEIGHT = 10**6
DEFAULT_RELATION_BITS = 512


class GroupVerdict:
    CERTIFIED = "certified"
    REFUTED = "refuted"
    UNKNOWN = "unknown"

    __slots__ = ("tag", "witness_coeffs", "witness_value", "reason",
                 "no_relation_height", "families")

    def __init__(self, tag, witness_coeffs=None, witness_value=None, reason=None,
                 no_relation_height=None, families=None):
        self.tag = tag
        self.witness_coeffs = tuple(witness_coeffs) if witness_coeffs else None
        self.witness_value = witness_value
        self.reason = reason
        self.no_relation_height = no_relation_height
        self.families = families

    def is_certified(self):
        return self.tag == self.CERTIFIED

    def is_refuted(self):
        return self.tag == self.REFUTED

    def is_unknown(self):
        return self.tag == self.UNKNOWN

    def __repr__(self):
        if self.is_refuted():
            return (f"GroupVerdict(refuted, m={list(self.witness_coeffs)}, "
                    f"value={self.witness_value!r})")
        if self.is_unknown():
            return f"GroupVerdict(unknown, {self.reason.value})"
        return "GroupVerdict(certified)"


class MembershipResult:
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    __slots__ = ("tag", "coeffs", "reason")

    def __init__(self, tag, coeffs=None, reason=None):
        self.tag = tag
        self.coeffs = tuple(coeffs) if coeffs is not None else None
        self.reason = reason

    def is_yes(self):
        return self.tag == self.YES

    def is_no(self):
        return self.tag == self.NO

    def is_unknown(self):
        return self.tag == self.UNKNOWN

    def __repr__(self):
        return f"MembershipResult({self.tag}{'' if not self.coeffs else ', ' + str(list(self.coeffs))})"


class CyclicityResult:
    CYCLIC = "cyclic"
    NOT_CYCLIC = "not_cyclic"
    UNKNOWN = "unknown"

    __slots__ = ("tag", "generator", "reason", "evidence")

    def __init__(self, tag, generator=None, reason=None, evidence=None):
        self.tag = tag
        self.generator = generator
        self.reason = reason
        self.evidence = evidence

    def is_cyclic(self):
        return self.tag == self.CYCLIC

    def __repr__(self):
        if self.tag == self.CYCLIC:
            return f"CyclicityResult(cyclic, d={self.generator})"
        return f"CyclicityResult({self.tag})"


class RankResult:
    __slots__ = ("exact", "rank", "height")

    def __init__(self, exact: bool, rank: int, height: int | None = None):
        self.exact = exact
        self.rank = rank
        self.height = height

    def __repr__(self):
        if self.exact:
            return f"Rank({self.rank})"
        return f"AtLeast({self.rank}, H={self.height})"

    def __eq__(self, other):
        if isinstance(other, int):
            return self.exact and self.rank == other
        if isinstance(other, RankResult):
            return (self.exact, self.rank) == (other.exact, other.rank)
        return NotImplemented

    __hash__ = None


class _Coordinates:
    """Derived exact coordinate system for one group."""

    __slots__ = ("symbols", "sym_rows", "gauss_parts", "all_gauss", "has_logalg",
                 "full_rows")

    def __init__(self, gens):
        seen = {}
        for g in gens:
            for sym, _ in g.terms:
                seen.setdefault(id(sym), sym)
        import functools

        self.symbols = tuple(
            sorted(seen.values(),
                   key=functools.cmp_to_key(S.compare_symbols))
        )
        self.sym_rows = [self._sym_row(g) for g in gens]
        self.gauss_parts = [g.alg_part.as_gaussian() for g in gens]
        self.all_gauss = all(p is not None for p in self.gauss_parts)
        self.has_logalg = any(
            isinstance(s, S.LogAlgSymbol) for s in self.symbols
        )
        if self.all_gauss:
            self.full_rows = [
                row + [p.re, p.im]
                for row, p in zip(self.sym_rows, self.gauss_parts)
            ]
        else:
            self.full_rows = None

    def _sym_row(self, g) -> list[Fraction]:
        row = []
        for sym in self.symbols:
            c = g.coefficient(sym)
            row.append(c.re)
            row.append(c.im)
        return row

    def element_row(self, x) -> list[Fraction] | None:
        """x's coordinates over this system; None if x has foreign symbols."""
        for sym, c in x.terms:
            if not any(sym is s for s in self.symbols) and not c.is_zero():
                return None
        row = []
        for sym in self.symbols:
            c = x.coefficient(sym)
            row.append(c.re)
            row.append(c.im)
        return row

    def element_from_row(self, row: list[Fraction],
                         part: GaussianRational) -> "E.Element":
        terms = []
        for i, sym in enumerate(self.symbols):
            c = GaussianRational(row[2 * i], row[2 * i + 1])
            if not c.is_zero():
                terms.append((sym, c))
        return E.make_element(part, terms)


class FGGroup:
    """Immutable ordered list of generator elements."""

    __slots__ = ("generators", "_lock", "_coords", "_verdict", "_rank")

    def __init__(self, generators):
        gens = tuple(generators)
        for g in gens:
            if not isinstance(g, E.Element):
                raise TypeError(f"not an element: {g!r}")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "_lock", threading.Lock())
        object.__setattr__(self, "_coords", None)
        object.__setattr__(self, "_verdict", None)
        object.__setattr__(self, "_rank", None)

    def __setattr__(self, *_):
        raise AttributeError("FGGroup is immutable; use with_generator")

    def __len__(self):
        return len(self.generators)

    def coords(self) -> _Coordinates:
        with self._lock:
            if self._coords is None:
                object.__setattr__(self, "_coords", _Coordinates(self.generators))
            return self._coords

    def with_generator(self, g: "E.Element") -> "FGGroup":
        return FGGroup(self.generators + (g,))

    def families(self) -> set:
        out = set()
        for g in self.generators:
            out |= g.families()
        return out

    def has_logalg(self) -> bool:
        return any(g.has_logalg() for g in self.generators)

    def all_evaluable(self) -> bool:
        return not any(g.has_unbound_abstract() for g in self.generators)

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.generators)
        return f"gp{{{inner}}}"


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def group_make(gens) -> FGGroup:
    return FGGroup(gens)


def exp_group(exponents) -> FGGroup:
    """gp{e^a : a in exponents}; exponents distinct nonzero algebraics."""
    syms = []
    gens = []
    for a in exponents:
        if isinstance(a, (int, Fraction)):
            a = alg.from_fraction(Fraction(a))
        elif isinstance(a, GaussianRational):
            a = alg.from_gaussian(a)
        if a.is_zero():
            raise ZeroExponent("exponent 0 is excluded (e^0 = 1 is algebraic)")
        sym = S.exp_symbol(a)
        if any(sym is s for s in syms):
            raise DuplicateExponent(f"duplicate exponent {a!r}")
        syms.append(sym)
        gens.append(E.make_element(None, [(sym, 1)]))
    return FGGroup(gens)


def log_group(args) -> FGGroup:
    """gp{log a : a in args} for positive rational or real-algebraic args."""
    gens = []
    for a in args:
        if isinstance(a, (int, Fraction)):
            if Fraction(a) <= 0:
                raise NonPositiveLogArgument(f"log argument {a} is not positive")
        elif isinstance(a, alg.AlgebraicNumber):
            if not alg.im_is_zero(a) or a.sign_real() <= 0:
                raise NonPositiveLogArgument("log argument must be a positive real")
        gens.append(E.log_element(a))
    return FGGroup(gens)


def pair_group(name: str = "T", binding: str | None = None) -> FGGroup:
    """gp{T, iT} for a real abstract transcendental T."""
    if binding is not None:
        S.bind_abstract(name, binding)
    else:
        S.t_symbol(name, real=True)
    return FGGroup([
        E.t_element(name),
        E.t_element(name, coeff=GaussianRational(0, 1)),
    ])


# ---------------------------------------------------------------------------
# Certification
# ---------------------------------------------------------------------------


def _lex_positive(v: alg.AlgebraicNumber) -> bool:
    """(Re, Im) lexicographic positivity of a nonzero algebraic number."""
    g = v.as_gaussian()
    if g is not None:
        return g.re > 0 or (g.re == 0 and g.im > 0)
    s = alg.add(v, alg.conj(v)).sign_real()
    if s:
        return s > 0
    im2 = alg.mul(alg.sub(v, alg.conj(v)),
                  alg.from_gaussian(GaussianRational(0, -1)))
    return im2.sign_real() > 0


def _kernel_functional(G: FGGroup, m: list[int]):
    """Sum of m_j * algebraic_part(g_j), exact."""
    coords = G.coords()
    if coords.all_gauss:
        total = GaussianRational(0)
        for mj, p in zip(m, coords.gauss_parts):
            total = total + p * mj
        return alg.from_gaussian(total)
    total = alg.from_int(0)
    for mj, g in zip(m, G.generators):
        if mj:
            total = alg.add(total, alg.mul(alg.from_int(mj), g.alg_part))
    return total


def certify(G: FGGroup, relation_height: int = DEFAULT_RELATION_HEIGHT,
            relation_bits: int = DEFAULT_RELATION_BITS) -> GroupVerdict:
    """Decide whether every nonzero element of G is transcendental.

    Kernel vectors of the symbol coordinates are exactly the integer
    combinations whose symbolic part cancels; any of them with a nonzero
    algebraic value refutes the group.  With a clean kernel, a single
    certifiable symbol family certifies the whole group; mixed families
    stay Unknown with numeric no-relation evidence.
    """
    key = (relation_height, relation_bits)
    with G._lock:
        if G._verdict is not None and G._verdict[0] == key:
            return G._verdict[1]
    verdict = _certify_impl(G, relation_height, relation_bits)
    with G._lock:
        object.__setattr__(G, "_verdict", (key, verdict))
        return verdict


def _certify_impl(G, relation_height, relation_bits) -> GroupVerdict:
    k = len(G.generators)
    if k == 0:
        return GroupVerdict(GroupVerdict.CERTIFIED)
    coords = G.coords()
    if coords.symbols:
        kernel = lat.left_kernel_rational(coords.sym_rows)
    else:
        kernel = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    for b in kernel:
        value = _kernel_functional(G, b)
        if not value.is_zero():
            if not _lex_positive(value):
                b = [-x for x in b]
                value = alg.neg(value)
            return GroupVerdict(GroupVerdict.REFUTED, witness_coeffs=b,
                                witness_value=value)
    fams = G.families()
    if not fams:
        return GroupVerdict(GroupVerdict.CERTIFIED)
    if len(fams) == 1:
        fam = next(iter(fams))
        if fam == S.FAMILY_LOG and coords.has_logalg:
            if all(g.alg_part.is_zero() for g in G.generators):
                # any nonzero log-combination value exponentiates to an
                # algebraic number, so it cannot itself be algebraic
                return GroupVerdict(GroupVerdict.CERTIFIED, families=fams)
            return _unknown_verdict(
                G, fams, UnknownReason.MULTIPLICATIVE_RELATION_POSSIBLE,
                relation_height, relation_bits,
            )
        return GroupVerdict(GroupVerdict.CERTIFIED, families=fams)
    return _unknown_verdict(G, fams, UnknownReason.SCHANUEL_CONDITIONAL,
                            relation_height, relation_bits)


def _unknown_verdict(G, fams, reason, relation_height, relation_bits):
    height = 0
    if G.all_evaluable():
        from .smallelem import relation_search

        report = relation_search(list(G.generators), relation_height,
                                 relation_bits)
        if report.relation is None:
            height = report.height
    return GroupVerdict(GroupVerdict.UNKNOWN, reason=reason,
                        no_relation_height=height, families=fams)


# ---------------------------------------------------------------------------
# Membership
# ---------------------------------------------------------------------------


def member(G: FGGroup, x: "E.Element") -> MembershipResult:
    """Is x an integer combination of the generators?

    Exact over complete symbol families with Gaussian-rational algebraic
    parts; the returned coefficient vector replays exactly.
    """
    coords = G.coords()
    if coords.has_logalg or x.has_logalg():
        return MembershipResult(
            MembershipResult.UNKNOWN,
            reason=UnknownReason.MULTIPLICATIVE_RELATION_POSSIBLE,
        )
    xg = x.alg_part.as_gaussian()
    if not coords.all_gauss or xg is None:
        return MembershipResult(
            MembershipResult.UNKNOWN,
            reason=UnknownReason.SCHANUEL_CONDITIONAL,
        )
    row = coords.element_row(x)
    if row is None:
        return MembershipResult(MembershipResult.NO)
    target = row + [xg.re, xg.im]
    if not G.generators:
        return (MembershipResult(MembershipResult.YES, coeffs=())
                if not any(target) else MembershipResult(MembershipResult.NO))
    sol = lat.solve_left_rational(coords.full_rows, target)
    if sol is None:
        return MembershipResult(MembershipResult.NO)
    return MembershipResult(MembershipResult.YES, coeffs=sol)


def combine(G: FGGroup, m) -> "E.Element":
    """The element sum_j m_j * g_j (witness replay helper)."""
    total = E.zero_element()
    for mj, g in zip(m, G.generators):
        if mj:
            total = total + g.scale(mj)
    return total


# ---------------------------------------------------------------------------
# Cyclicity and rank
# ---------------------------------------------------------------------------


def is_cyclic_pair(a: "E.Element", b: "E.Element") -> CyclicityResult:
    """gp{a, b} cyclic iff a, b are linearly dependent over the rationals.

    On dependence the returned generator d is the primitive generator of
    the rank-1 coordinate lattice, so member(gp{d}, a) and
    member(gp{d}, b) both replay.
    """
    za, zb = a.is_zero(), b.is_zero()
    if za.is_true() or zb.is_true():
        raise ZeroInput("cyclicity is defined for nonzero elements")
    if za.is_unknown() or zb.is_unknown():
        return CyclicityResult(CyclicityResult.UNKNOWN,
                               reason=(za if za.is_unknown() else zb).reason)
    pair = FGGroup([a, b])
    coords = pair.coords()
    if not coords.all_gauss:
        return CyclicityResult(CyclicityResult.UNKNOWN,
                               reason=UnknownReason.SCHANUEL_CONDITIONAL)
    rank = lat.rank_rational(coords.full_rows)
    if rank == 1:
        # a formal dependence is an element identity, hence unconditional
        basis = lat.primitive_span_basis(coords.full_rows)
        row = basis[0]
        part = GaussianRational(row[-2], row[-1])
        d = coords.element_from_row(row[:-2], part)
        return CyclicityResult(CyclicityResult.CYCLIC, generator=d)
    if coords.has_logalg:
        return CyclicityResult(
            CyclicityResult.UNKNOWN,
            reason=UnknownReason.MULTIPLICATIVE_RELATION_POSSIBLE,
        )
    fams = a.families() | b.families()
    if len(fams) > 1:
        # independence across families (e.g. e versus pi) is an open problem
        return CyclicityResult(CyclicityResult.UNKNOWN,
                               reason=UnknownReason.SCHANUEL_CONDITIONAL,
                               evidence=_pair_evidence(a, b))
    return CyclicityResult(CyclicityResult.NOT_CYCLIC)


def _pair_evidence(a, b):
    from .errors import UnboundSymbol

    try:
        return (a.eval_box(128), b.eval_box(128))
    except UnboundSymbol:
        return None


def rank_q(G: FGGroup) -> RankResult:
    """Rational rank of the generator values.

    Exact whenever all symbols live in complete families and algebraic
    parts are Gaussian rationals; otherwise a sound lower bound (the rank
    of the reliable coordinate columns) with no-relation search evidence.
    """
    with G._lock:
        if G._rank is not None:
            return G._rank
    result = _rank_impl(G)
    with G._lock:
        if G._rank is None:
            object.__setattr__(G, "_rank", result)
        return G._rank


def _rank_impl(G: FGGroup) -> RankResult:
    if not G.generators:
        return RankResult(True, 0)
    coords = G.coords()
    if not coords.has_logalg and coords.all_gauss:
        return RankResult(True, lat.rank_rational(coords.full_rows))
    # sound lower bound: keep columns whose coordinates are reliable
    keep = []
    for i, sym in enumerate(coords.symbols):
        if sym.family != S.FAMILY_LOG:
            keep.extend((2 * i, 2 * i + 1))
    rows = [[r[j] for j in keep] for r in coords.sym_rows]
    if coords.all_gauss:
        rows = [row + [p.re, p.im]
                for row, p in zip(rows, coords.gauss_parts)]
    lower = lat.rank_rational(rows) if rows and rows[0] else 0
    lower = max(lower, _interval_real_rank(G))
    height = 0
    if G.all_evaluable():
        from .smallelem import relation_search

        report = relation_search(list(G.generators), 100, 128)
        if report.relation is None:
            height = report.height
    return RankResult(False, lower, height)


def _interval_real_rank(G: FGGroup, bits: int = 128) -> int:
    """Proven lower bound on rank via the real 2D geometry of the values."""
    from .errors import PrecisionExhausted, UnboundSymbol

    boxes = []
    for g in G.generators:
        try:
            boxes.append(g.eval_box(bits))
        except (UnboundSymbol, PrecisionExhausted):
            return 0
    nonzero = [b for b in boxes if not b.contains_zero()]
    if not nonzero:
        return 0
    prec = bits + 8
    for i in range(len(nonzero)):
        for j in range(i + 1, len(nonzero)):
            u, v = nonzero[i], nonzero[j]
            cross = u.re.mul(v.im, prec).sub(u.im.mul(v.re, prec), prec)
            if not cross.contains_zero():
                return 2
    return 1
