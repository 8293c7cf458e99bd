"""Canonical symbolic group elements.

An element is an algebraic part plus a finitely supported map from
symbols to Gaussian-rational coefficients, kept canonical: no zero
coefficients, logs of rationals decomposed into prime atoms, exp(0)
folded into the algebraic part, terms sorted by the symbol order.

Zero tests are exact within each certifiable symbol family (and across
families under the formal independence model; see is_zero).  Elements
containing logs of irrational algebraics get semi-decidable tests:
an interval can refute zero, never confirm it.
"""

from __future__ import annotations

import functools
import threading
from fractions import Fraction

from . import algebraic as alg
from . import _poly
from . import symbols as S
from .errors import InvalidSymbol, UnboundSymbol
from .intervals import Box
from .rationals import GaussianRational
from .verdicts import TranscendenceVerdict, TriBool, UnknownReason

ZERO_TEST_MAX_BITS = 1024
DEFAULT_EVAL_BITS = 256


class Element:
    """algebraic part + sum of coeff * symbol, in canonical form."""

    __slots__ = ("alg_part", "terms", "_iz", "_lock")

    def __init__(self, *a, **k):
        raise TypeError("use make_element or the per-family builders")

    @classmethod
    def _raw(cls, alg_part, terms):
        self = object.__new__(cls)
        object.__setattr__(self, "alg_part", alg_part)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_iz", None)
        object.__setattr__(self, "_lock", threading.Lock())
        return self

    def __setattr__(self, *_):
        raise AttributeError("Element is immutable")

    # -- structure -------------------------------------------------------

    def symbols(self):
        return tuple(s for s, _ in self.terms)

    def coefficient(self, sym) -> GaussianRational:
        for s, c in self.terms:
            if s is sym:
                return c
        return GaussianRational(0)

    def families(self) -> set:
        return {s.family for s, _ in self.terms}

    def has_logalg(self) -> bool:
        return any(isinstance(s, S.LogAlgSymbol) for s, _ in self.terms)

    def has_unbound_abstract(self) -> bool:
        return any(
            isinstance(s, S.AbstractSymbol) and s.binding() is None
            for s, _ in self.terms
        )

    def single_term(self):
        """(symbol, coeff) if the element is exactly one term, else None."""
        if len(self.terms) == 1 and self.alg_part.is_zero():
            return self.terms[0]
        return None

    # -- group operations --------------------------------------------------

    def __add__(self, other: "Element") -> "Element":
        merged = {id(s): (s, c) for s, c in self.terms}
        for s, c in other.terms:
            k = id(s)
            if k in merged:
                merged[k] = (s, merged[k][1] + c)
            else:
                merged[k] = (s, c)
        return make_element(
            alg.add(self.alg_part, other.alg_part),
            [(s, c) for s, c in merged.values()],
        )

    def __neg__(self) -> "Element":
        return Element._raw(
            alg.neg(self.alg_part), tuple((s, -c) for s, c in self.terms)
        )

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, c) -> "Element":
        c = GaussianRational.coerce(c)
        if c.is_zero():
            return zero_element()
        return Element._raw(
            alg.mul(self.alg_part, alg.from_gaussian(c)),
            tuple((s, cc * c) for s, cc in self.terms),
        )

    def __rmul__(self, c):
        return self.scale(c)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> TriBool:
        """Exact zero test, complete for {EXP, LOG-prime, PI, abstract}.

        Within each family this is a theorem (Lindemann-Weierstrass for
        exp, unique factorization for prime logs, transcendence of pi,
        declared independence for abstract symbols).  Across those
        families the symbols are treated as jointly independent, the
        formal model this library computes in.  Elements involving logs
        of irrational algebraics are only semi-decided: a nonzero
        enclosure refutes zero, nothing can confirm it.
        """
        with self._lock:
            if self._iz is not None:
                return self._iz
        result = self._compute_is_zero()
        with self._lock:
            object.__setattr__(self, "_iz", result)
        return result

    def _compute_is_zero(self) -> TriBool:
        if not self.terms:
            return TriBool.from_bool(self.alg_part.is_zero())
        if not self.has_logalg():
            return TriBool.false()
        bits = 64
        box = None
        while bits <= ZERO_TEST_MAX_BITS:
            try:
                box = self.eval_box(bits)
            except UnboundSymbol:
                return TriBool.unknown(UnknownReason.SCHANUEL_CONDITIONAL)
            if not box.contains_zero():
                return TriBool.false()
            bits *= 2
        return TriBool.unknown(
            UnknownReason.MULTIPLICATIVE_RELATION_POSSIBLE, evidence=box
        )

    def transcendence(self) -> TranscendenceVerdict:
        """Certify that the element's value is transcendental.

        Certificates exist per family: a nonzero exp-combination plus any
        algebraic shift (Lindemann-Weierstrass), a nonzero prime-log
        combination plus any shift, q*pi + a, q*T + a.  Mixed families
        mirror open problems (is e + pi transcendental?) and return
        Unknown rather than a guess.
        """
        if not self.terms:
            return TranscendenceVerdict(
                TranscendenceVerdict.REFUTED, value=self.alg_part
            )
        fams = self.families()
        if len(fams) > 1:
            return TranscendenceVerdict(
                TranscendenceVerdict.UNKNOWN,
                reason=UnknownReason.SCHANUEL_CONDITIONAL,
                evidence=self._try_eval(DEFAULT_EVAL_BITS),
            )
        fam = next(iter(fams))
        if fam == S.FAMILY_LOG and self.has_logalg():
            if not self.alg_part.is_zero():
                return TranscendenceVerdict(
                    TranscendenceVerdict.UNKNOWN,
                    reason=UnknownReason.SCHANUEL_CONDITIONAL,
                    evidence=self._try_eval(DEFAULT_EVAL_BITS),
                )
            iz = self.is_zero()
            if iz.is_false():
                # nonzero log combination: e^value is algebraic while the
                # exponential of a nonzero algebraic is not
                return TranscendenceVerdict(TranscendenceVerdict.CERTIFIED)
            return TranscendenceVerdict(
                TranscendenceVerdict.UNKNOWN,
                reason=UnknownReason.MULTIPLICATIVE_RELATION_POSSIBLE,
                evidence=iz.evidence,
            )
        return TranscendenceVerdict(TranscendenceVerdict.CERTIFIED)

    def _try_eval(self, bits: int) -> Box | None:
        try:
            return self.eval_box(bits)
        except UnboundSymbol:
            return None

    # -- numerics --------------------------------------------------------------

    def eval_box(self, bits: int) -> Box:
        """Rigorous enclosure of the element's value."""
        prec = bits + 16
        acc = self.alg_part.refine(bits)
        for sym, coeff in self.terms:
            acc = acc.add(sym.eval_box(bits).scale_gaussian(coeff, prec), prec)
        return acc

    # -- realness (sufficient symbol-wise conditions) ---------------------------

    def is_real_provable(self) -> bool:
        if not alg.im_is_zero(self.alg_part):
            return False
        return all(s.is_real_valued() and c.is_real() for s, c in self.terms)

    def is_imaginary_provable(self) -> bool:
        if not alg.re_is_zero(self.alg_part):
            return False
        return all(s.is_real_valued() and c.is_imaginary() for s, c in self.terms)

    # -- equality / display ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if len(self.terms) != len(other.terms):
            return False
        for (sa, ca), (sb, cb) in zip(self.terms, other.terms):
            if sa is not sb or ca != cb:
                return False
        return alg.equals(self.alg_part, other.alg_part)

    __hash__ = None

    def __repr__(self):
        return f"Element({self})"

    def __str__(self):
        from .parser import format_element

        return format_element(self)


def make_element(alg_part=None, terms=()) -> Element:
    """Canonical element from an algebraic part and (symbol, coeff) pairs."""
    if alg_part is None:
        alg_part = alg.from_int(0)
    elif isinstance(alg_part, (int, Fraction)):
        alg_part = alg.from_fraction(Fraction(alg_part))
    elif isinstance(alg_part, GaussianRational):
        alg_part = alg.from_gaussian(alg_part)
    merged: dict[int, list] = {}
    for sym, coeff in terms:
        if not isinstance(sym, S.Symbol):
            raise InvalidSymbol(f"not a symbol: {sym!r}")
        coeff = GaussianRational.coerce(coeff)
        slot = merged.get(id(sym))
        if slot is None:
            merged[id(sym)] = [sym, coeff]
        else:
            slot[1] = slot[1] + coeff
    kept = [(sym, c) for sym, c in merged.values() if not c.is_zero()]
    kept.sort(key=functools.cmp_to_key(lambda a, b: S.compare_symbols(a[0], b[0])))
    return Element._raw(alg_part, tuple(kept))


def zero_element() -> Element:
    return Element._raw(alg.from_int(0), ())


def algebraic_element(a) -> Element:
    return make_element(a, ())


def exp_element(exponent, coeff=1) -> Element:
    """coeff * e^exponent; exp(0) folds into the algebraic part."""
    coeff = GaussianRational.coerce(coeff)
    if isinstance(exponent, (int, Fraction)):
        exponent = alg.from_fraction(Fraction(exponent))
    elif isinstance(exponent, GaussianRational):
        exponent = alg.from_gaussian(exponent)
    if exponent.is_zero():
        return make_element(coeff, ())
    return make_element(None, [(S.exp_symbol(exponent), coeff)])


def log_element(argument, coeff=1) -> Element:
    """coeff * log(argument) for a positive real argument.

    Rational arguments decompose into prime atoms via factorization
    (log 6 = log 2 + log 3); irrational algebraic arguments stay opaque.
    """
    coeff = GaussianRational.coerce(coeff)
    if isinstance(argument, alg.AlgebraicNumber):
        if not alg.im_is_zero(argument):
            raise InvalidSymbol("log argument must be a positive real")
        g = argument.as_gaussian()
        if g is not None:
            argument = g.re
        else:
            return make_element(None, [(S.log_alg_symbol(argument), coeff)])
    argument = Fraction(argument)
    if argument <= 0:
        raise InvalidSymbol(f"log argument must be positive, got {argument}")
    terms = []
    for p, e in _poly.factorint(argument.numerator).items():
        terms.append((S.log_prime_symbol(p), coeff * e))
    for p, e in _poly.factorint(argument.denominator).items():
        terms.append((S.log_prime_symbol(p), coeff * (-e)))
    return make_element(None, terms)


def pi_element(coeff=1) -> Element:
    return make_element(None, [(S.pi_symbol(), coeff)])


def t_element(name: str = "T", coeff=1, real: bool = True) -> Element:
    return make_element(None, [(S.t_symbol(name, real=real), coeff)])
