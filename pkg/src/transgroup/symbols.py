"""Transcendental basis symbols.

A symbol is one atom of the symbolic basis a group element is written
over: e^alpha for a nonzero algebraic alpha, log p for a prime p, log of
a positive irrational real algebraic, pi, or an abstract transcendental
T.  Symbols are interned: constructing the same mathematical atom twice
(even from different representations of the same algebraic number)
returns the same object, so element maps can key on identity.

Family tags drive certification: EXP symbols certify through the
Lindemann-Weierstrass theorem, LOG-prime through unique factorization,
pi through its own transcendence, abstract symbols by declaration.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from . import algebraic as alg
from . import _poly
from .errors import InvalidSymbol, UnboundSymbol
from .intervals import Box, RealInterval, exp_box, log_interval, pi_box

FAMILY_EXP = ("exp",)
FAMILY_LOG = ("log",)
FAMILY_PI = ("pi",)


def family_abstract(name: str) -> tuple:
    return ("abstract", name)


class Symbol:
    """Base class; instances are interned and compared by identity."""

    __slots__ = ("_rank",)

    @property
    def family(self) -> tuple:
        raise NotImplementedError

    def is_real_valued(self) -> bool:
        raise NotImplementedError

    def eval_box(self, bits: int) -> Box:
        raise NotImplementedError


class ExpSymbol(Symbol):
    __slots__ = ("exponent",)

    def __init__(self, exponent):
        object.__setattr__(self, "_rank", 0)
        object.__setattr__(self, "exponent", exponent)

    family = FAMILY_EXP

    def is_real_valued(self) -> bool:
        # e^a is real iff Im a is an integer multiple of pi; a nonzero
        # algebraic imaginary part can never equal a nonzero multiple of
        # the transcendental pi, so the test collapses to Im a = 0.
        return alg.im_is_zero(self.exponent)

    def eval_box(self, bits: int) -> Box:
        return exp_box(self.exponent.refine(bits), bits)

    def __repr__(self):
        return f"ExpSymbol({self.exponent!r})"


class LogPrimeSymbol(Symbol):
    __slots__ = ("prime",)

    def __init__(self, prime: int):
        object.__setattr__(self, "_rank", 1)
        object.__setattr__(self, "prime", prime)

    family = FAMILY_LOG

    def is_real_valued(self) -> bool:
        return True

    def eval_box(self, bits: int) -> Box:
        zero = RealInterval.point(0)
        return Box(log_interval(RealInterval.point(self.prime), bits), zero)

    def __repr__(self):
        return f"LogPrimeSymbol({self.prime})"


class LogAlgSymbol(Symbol):
    __slots__ = ("argument",)

    def __init__(self, argument):
        object.__setattr__(self, "_rank", 2)
        object.__setattr__(self, "argument", argument)

    family = FAMILY_LOG

    def is_real_valued(self) -> bool:
        return True

    def eval_box(self, bits: int) -> Box:
        b = self.argument.refine(bits)
        extra = bits
        while not b.re.strictly_positive():
            extra *= 2
            b = self.argument.refine(extra)
        zero = RealInterval.point(0)
        return Box(log_interval(b.re, bits), zero)

    def __repr__(self):
        return f"LogAlgSymbol({self.argument!r})"


class PiSymbol(Symbol):
    __slots__ = ()

    def __init__(self):
        object.__setattr__(self, "_rank", 3)

    family = FAMILY_PI

    def is_real_valued(self) -> bool:
        return True

    def eval_box(self, bits: int) -> Box:
        return pi_box(bits)

    def __repr__(self):
        return "PiSymbol()"


class AbstractSymbol(Symbol):
    __slots__ = ("name", "real")

    def __init__(self, name: str, real: bool):
        object.__setattr__(self, "_rank", 4)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "real", real)

    @property
    def family(self) -> tuple:
        return family_abstract(self.name)

    def binding(self) -> str | None:
        with _lock:
            return _bindings.get(self.name)

    def is_real_valued(self) -> bool:
        return self.real or self.binding() is not None  # all bindings are real

    def eval_box(self, bits: int) -> Box:
        tag = self.binding()
        if tag is None:
            raise UnboundSymbol(
                f"abstract symbol {self.name!r} has no numeric binding"
            )
        return _binding_box(tag, bits)

    def __repr__(self):
        return f"AbstractSymbol({self.name!r})"


# ---------------------------------------------------------------------------
# Interning
# ---------------------------------------------------------------------------

_lock = threading.RLock()
_exp_registry: list[ExpSymbol] = []
_logalg_registry: list[LogAlgSymbol] = []
_logprime_registry: dict[int, LogPrimeSymbol] = {}
_abstract_registry: dict[str, AbstractSymbol] = {}
_bindings: dict[str, str] = {}
_PI = PiSymbol()

BINDING_TAGS = ("e", "pi", "liouville")


def exp_symbol(exponent) -> ExpSymbol:
    """Interned e^exponent; the exponent must be a nonzero algebraic."""
    if not isinstance(exponent, alg.AlgebraicNumber):
        exponent = alg.from_gaussian(exponent) if not isinstance(
            exponent, (int, Fraction)
        ) else alg.from_fraction(Fraction(exponent))
    if exponent.is_zero():
        raise InvalidSymbol("exp(0) is the algebraic constant 1, not a symbol")
    with _lock:
        box = exponent.box()
        for sym in _exp_registry:
            if sym.exponent.box().overlaps(box) and alg.equals(sym.exponent, exponent):
                return sym
        sym = ExpSymbol(exponent)
        _exp_registry.append(sym)
        return sym


def log_prime_symbol(p: int) -> LogPrimeSymbol:
    if not _poly.isprime(p):
        raise InvalidSymbol(f"log_prime_symbol requires a prime, got {p}")
    with _lock:
        sym = _logprime_registry.get(p)
        if sym is None:
            sym = LogPrimeSymbol(p)
            _logprime_registry[p] = sym
        return sym


def log_alg_symbol(argument) -> LogAlgSymbol:
    """Interned log(argument) for a positive irrational real algebraic.

    Rational arguments must be decomposed into prime atoms by the caller
    (see elements.log_element); passing one here is an error.
    """
    if not isinstance(argument, alg.AlgebraicNumber):
        raise InvalidSymbol("log_alg_symbol expects an AlgebraicNumber")
    if not alg.im_is_zero(argument):
        raise InvalidSymbol("log argument must be a positive real")
    if argument.sign_real() <= 0:
        raise InvalidSymbol("log argument must be positive")
    g = argument.as_gaussian()
    if g is not None:
        raise InvalidSymbol(
            "rational log arguments canonicalize to prime atoms; "
            "use elements.log_element"
        )
    with _lock:
        box = argument.box()
        for sym in _logalg_registry:
            if sym.argument.box().overlaps(box) and alg.equals(sym.argument, argument):
                return sym
        sym = LogAlgSymbol(argument)
        _logalg_registry.append(sym)
        return sym


def pi_symbol() -> PiSymbol:
    return _PI


def t_symbol(name: str = "T", real: bool = True) -> AbstractSymbol:
    with _lock:
        sym = _abstract_registry.get(name)
        if sym is None:
            sym = AbstractSymbol(name, real)
            _abstract_registry[name] = sym
        elif sym.real != real:
            raise InvalidSymbol(
                f"abstract symbol {name!r} already interned with real={sym.real}"
            )
        return sym


def bind_abstract(name: str, tag: str) -> AbstractSymbol:
    """Bind an abstract symbol to e, pi or the Liouville constant."""
    if tag not in BINDING_TAGS:
        raise InvalidSymbol(f"unknown binding {tag!r}; choose from {BINDING_TAGS}")
    sym = t_symbol(name)
    with _lock:
        old = _bindings.get(name)
        if old is not None and old != tag:
            raise InvalidSymbol(f"{name!r} is already bound to {old!r}")
        _bindings[name] = tag
    return sym


def reset_abstract_symbols():
    """Forget abstract symbols and bindings (test isolation helper)."""
    with _lock:
        _abstract_registry.clear()
        _bindings.clear()


def _liouville_fraction(bits: int) -> tuple[Fraction, Fraction]:
    """Partial sum of sum(10^-k!) plus a rigorous tail bound."""
    digits_needed = bits // 3 + 4
    k, fact = 1, 1
    total = Fraction(0)
    while fact <= digits_needed:
        total += Fraction(1, 10**fact)
        k += 1
        fact *= k
    tail = Fraction(2, 10**fact)
    return total, tail


def _binding_box(tag: str, bits: int) -> Box:
    if tag == "e":
        return exp_box(Box.point(1, 0), bits)
    if tag == "pi":
        return pi_box(bits)
    if tag == "liouville":
        total, tail = _liouville_fraction(bits)
        prec = bits + 16
        return Box(
            RealInterval.from_endpoints(total, total + tail, prec),
            RealInterval.point(0),
        )
    raise UnboundSymbol(f"unknown binding tag {tag!r}")


# ---------------------------------------------------------------------------
# Canonical ordering
# ---------------------------------------------------------------------------

_order_cache: dict[tuple[int, int], int] = {}


def compare_symbols(a: Symbol, b: Symbol) -> int:
    """Deterministic total order; value-based, so stable across runs."""
    if a is b:
        return 0
    if a._rank != b._rank:
        return -1 if a._rank < b._rank else 1
    key = (id(a), id(b))
    cached = _order_cache.get(key)
    if cached is not None:
        return cached
    if isinstance(a, ExpSymbol):
        result = alg.compare_lex(a.exponent, b.exponent)
    elif isinstance(a, LogPrimeSymbol):
        result = -1 if a.prime < b.prime else 1
    elif isinstance(a, LogAlgSymbol):
        result = alg.compare_lex(a.argument, b.argument)
    elif isinstance(a, AbstractSymbol):
        result = -1 if a.name < b.name else 1
    else:  # pragma: no cover - PiSymbol is a singleton
        result = 0
    with _lock:
        _order_cache[key] = result
        _order_cache[(id(b), id(a))] = -result
    return result
