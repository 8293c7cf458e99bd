"""Expression grammar for elements and groups, plus the canonical printer.

    group   := expr (',' expr)*
    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*          -- at most one symbol atom
    factor  := rat | 'i' | '(' gauss ')' | 'sqrt(' rat ')'
             | 'root(' poly ';' box ')' | atom
    atom    := 'exp(' gaussOrAlg ')' | 'log(' posArg ')' | 'pi' | ident
    gauss   := ['+'|'-'] gterm (('+'|'-') gterm)*
    gterm   := rat ['*'? 'i'] | 'i'
    rat     := int ['/' int]
    poly    := polynomial in x with integer coefficients
    box     := rat ',' rat ',' rat ',' rat   -- reLo, reHi, imLo, imHi

Any identifier that is not a keyword names an abstract transcendental
symbol.  The printer emits exactly this grammar, and printing followed by
parsing reproduces the element.
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import algebraic as alg
from . import elements as E
from . import groups as G_mod
from . import symbols as S
from .errors import ParseError, SemanticError
from .rationals import GaussianRational

KEYWORDS = {"exp", "log", "pi", "sqrt", "root", "i", "x"}

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^();,]))"
)


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind = kind
        self.text = text
        self.pos = pos

    def __repr__(self):
        return f"{self.kind}:{self.text}@{self.pos}"


def _tokenize(text: str) -> list[_Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise ParseError(
                f"unexpected character {stripped[0]!r} at position {at}",
                position=at,
            )
        if m.lastgroup == "int":
            out.append(_Token("int", m.group("int"), m.start("int")))
        elif m.lastgroup == "ident":
            out.append(_Token("ident", m.group("ident"), m.start("ident")))
        else:
            out.append(_Token("op", m.group("op"), m.start("op")))
        pos = m.end()
    out.append(_Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    # -- token plumbing ---------------------------------------------------

    def peek(self) -> _Token:
        return self.toks[self.i]

    def next(self) -> _Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> _Token:
        t = self.peek()
        if t.text != text:
            raise ParseError(
                f"expected {text!r} at position {t.pos}, found {t.text!r}",
                position=t.pos,
                expected=[text],
            )
        return self.next()

    def at_op(self, *ops) -> bool:
        t = self.peek()
        return t.kind == "op" and t.text in ops

    # -- terminals ----------------------------------------------------------

    def parse_int(self) -> int:
        sign = 1
        if self.at_op("+", "-"):
            sign = -1 if self.next().text == "-" else 1
        t = self.peek()
        if t.kind != "int":
            raise ParseError(
                f"expected an integer at position {t.pos}", position=t.pos,
                expected=["integer"],
            )
        self.next()
        return sign * int(t.text)

    def parse_rat(self) -> Fraction:
        n = self.parse_int()
        if self.at_op("/"):
            self.next()
            d = self.parse_int()
            if d == 0:
                raise SemanticError("zero denominator")
            return Fraction(n, d)
        return Fraction(n)

    def parse_gauss(self) -> GaussianRational:
        """Signed sum of rational and imaginary components."""
        total = GaussianRational(0)
        first = True
        while True:
            sign = 1
            if self.at_op("+", "-"):
                sign = -1 if self.next().text == "-" else 1
            elif not first:
                break
            t = self.peek()
            if t.kind == "ident" and t.text == "i":
                self.next()
                total = total + GaussianRational(0, sign)
            elif t.kind == "int":
                q = self.parse_rat()
                if self.at_op("*") and self.toks[self.i + 1].text == "i":
                    self.next()
                    self.next()
                    total = total + GaussianRational(0, sign * q)
                elif self.peek().kind == "ident" and self.peek().text == "i":
                    self.next()
                    total = total + GaussianRational(0, sign * q)
                else:
                    total = total + GaussianRational(sign * q)
            else:
                raise ParseError(
                    f"expected a number at position {t.pos}", position=t.pos,
                    expected=["rational", "i"],
                )
            first = False
            if not self.at_op("+", "-"):
                break
        return total

    # -- algebraic constants --------------------------------------------------

    def parse_poly(self) -> tuple[int, ...]:
        """Integer polynomial in x, e.g. x^2-2 or 2*x^3+x-5."""
        coeffs: dict[int, int] = {}
        first = True
        while True:
            sign = 1
            if self.at_op("+", "-"):
                sign = -1 if self.next().text == "-" else 1
            elif not first:
                break
            t = self.peek()
            coef = 1
            has_coef = False
            if t.kind == "int":
                coef = int(self.next().text)
                has_coef = True
                if self.at_op("*"):
                    self.next()
            deg = 0
            t = self.peek()
            if t.kind == "ident" and t.text == "x":
                self.next()
                deg = 1
                if self.at_op("^"):
                    self.next()
                    deg = self.parse_int()
                    if deg < 0:
                        raise SemanticError("negative exponent in polynomial")
            elif not has_coef:
                raise ParseError(
                    f"expected a polynomial term at position {t.pos}",
                    position=t.pos, expected=["coefficient", "x"],
                )
            coeffs[deg] = coeffs.get(deg, 0) + sign * coef
            first = False
            if not self.at_op("+", "-"):
                break
        if not coeffs:
            raise SemanticError("empty polynomial")
        top = max(coeffs)
        return tuple(coeffs.get(k, 0) for k in range(top + 1))

    def parse_alg_constant(self) -> "alg.AlgebraicNumber":
        t = self.peek()
        if t.kind == "ident" and t.text == "sqrt":
            self.next()
            self.expect("(")
            q = self.parse_rat()
            self.expect(")")
            return alg.sqrt_fraction(q)
        if t.kind == "ident" and t.text == "root":
            self.next()
            self.expect("(")
            poly = self.parse_poly()
            self.expect(";")
            corners = [self.parse_rat()]
            for _ in range(3):
                self.expect(",")
                corners.append(self.parse_rat())
            self.expect(")")
            return alg.make(poly, corners)
        raise ParseError(
            f"expected an algebraic constant at position {t.pos}",
            position=t.pos, expected=["sqrt", "root"],
        )

    def parse_exp_argument(self) -> "alg.AlgebraicNumber":
        t = self.peek()
        if t.kind == "ident" and t.text in ("sqrt", "root"):
            return self.parse_alg_constant()
        return alg.from_gaussian(self.parse_gauss())

    # -- atoms / factors ----------------------------------------------------------

    def parse_atom(self) -> "E.Element":
        t = self.peek()
        if t.kind != "ident":
            raise ParseError(
                f"expected a symbol at position {t.pos}", position=t.pos,
                expected=["exp", "log", "pi", "name"],
            )
        if t.text == "exp":
            self.next()
            self.expect("(")
            a = self.parse_exp_argument()
            self.expect(")")
            return E.exp_element(a)
        if t.text == "log":
            self.next()
            self.expect("(")
            tt = self.peek()
            if tt.kind == "ident" and tt.text in ("sqrt", "root"):
                arg = self.parse_alg_constant()
            else:
                arg = self.parse_rat()
                if arg <= 0:
                    raise SemanticError(f"log of a non-positive number: {arg}")
            self.expect(")")
            return E.log_element(arg)
        if t.text == "pi":
            self.next()
            return E.pi_element()
        if t.text in KEYWORDS:
            raise ParseError(
                f"unexpected keyword {t.text!r} at position {t.pos}",
                position=t.pos,
            )
        self.next()
        return E.t_element(t.text)

    def parse_term(self) -> "E.Element":
        """'*'-joined factors; numeric factors fold into one coefficient."""
        coeff = GaussianRational(1)
        alg_factor = None
        atom: "E.Element | None" = None
        while True:
            t = self.peek()
            if t.kind == "int":
                q = self.parse_rat()
                coeff = coeff * q
            elif t.kind == "op" and t.text == "(":
                self.next()
                g = self.parse_gauss()
                self.expect(")")
                coeff = coeff * g
            elif t.kind == "ident" and t.text == "i":
                self.next()
                coeff = coeff * GaussianRational(0, 1)
            elif t.kind == "ident" and t.text in ("sqrt", "root"):
                a = self.parse_alg_constant()
                alg_factor = a if alg_factor is None else alg.mul(alg_factor, a)
            elif t.kind == "ident":
                if atom is not None:
                    raise SemanticError(
                        f"two symbols in one product at position {t.pos}"
                    )
                atom = self.parse_atom()
            else:
                raise ParseError(
                    f"expected a factor at position {t.pos}", position=t.pos,
                    expected=["number", "symbol"],
                )
            if self.at_op("*"):
                self.next()
                continue
            break
        if atom is not None:
            if alg_factor is not None:
                raise SemanticError(
                    "algebraic constants cannot multiply transcendental symbols"
                )
            return atom.scale(coeff)
        value = alg.from_gaussian(coeff)
        if alg_factor is not None:
            value = alg.mul(value, alg_factor)
        return E.algebraic_element(value)

    def parse_expr(self) -> "E.Element":
        total = E.zero_element()
        sign = 1
        if self.at_op("+", "-"):
            sign = -1 if self.next().text == "-" else 1
        term = self.parse_term()
        total = total + (term if sign > 0 else -term)
        while self.at_op("+", "-"):
            sign = -1 if self.next().text == "-" else 1
            term = self.parse_term()
            total = total + (term if sign > 0 else -term)
        return total

    def parse_element(self) -> "E.Element":
        e = self.parse_expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(
                f"trailing input at position {t.pos}: {t.text!r}", position=t.pos,
            )
        return e

    def parse_group(self) -> "G_mod.FGGroup":
        gens = [self.parse_expr()]
        while self.at_op(","):
            self.next()
            gens.append(self.parse_expr())
        t = self.peek()
        if t.kind != "end":
            raise ParseError(
                f"trailing input at position {t.pos}: {t.text!r}", position=t.pos,
            )
        return G_mod.FGGroup(gens)


def parse_element(text: str) -> "E.Element":
    return _Parser(text).parse_element()


def parse_group(text: str) -> "G_mod.FGGroup":
    return _Parser(text).parse_group()


# ---------------------------------------------------------------------------
# Canonical printer
# ---------------------------------------------------------------------------


def format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_gaussian(c: GaussianRational, as_factor: bool = False) -> str:
    """Coefficient text; factors multiply an atom and may need parens."""
    if c.is_real():
        return format_fraction(c.re)
    if c.is_imaginary():
        if c.im == 1:
            return "i"
        if c.im == -1:
            return "-i"
        return f"{format_fraction(c.im)}*i"
    re_s = format_fraction(c.re)
    im_mag = format_fraction(abs(c.im))
    op = "+" if c.im > 0 else "-"
    im_s = "i" if abs(c.im) == 1 else f"{im_mag}*i"
    inner = f"{re_s}{op}{im_s}"
    return f"({inner})" if as_factor else inner


def format_poly(p: tuple[int, ...]) -> str:
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif k == 1:
            body = "x" if mag == 1 else f"{mag}*x"
        else:
            body = f"x^{k}" if mag == 1 else f"{mag}*x^{k}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'}{body}")
    return "".join(parts) if parts else "0"


def _friendly_corners(a: "alg.AlgebraicNumber"):
    """Short rational corners that still isolate a's root, if possible."""
    from math import ceil, floor

    box = a.refine(48)
    re_lo, re_hi, im_lo, im_hi = box.corners_fractions()
    w = max(re_hi - re_lo, im_hi - im_lo, Fraction(1, 2**24))
    D = 10**7
    cand = (
        Fraction(floor((re_lo - w) * D), D),
        Fraction(ceil((re_hi + w) * D), D),
        Fraction(floor((im_lo - w) * D), D),
        Fraction(ceil((im_hi + w) * D), D),
    )
    try:
        back = alg.make(a.poly, cand)
    except Exception:
        return None
    return cand if alg.equals(back, a) else None


def format_algebraic(a: "alg.AlgebraicNumber") -> str:
    g = a.as_gaussian()
    if g is not None:
        return format_gaussian(g)
    if a.display_hint:
        return a.display_hint
    corners = _friendly_corners(a)
    if corners is None:
        corners = a.box().corners_fractions()
    text = ", ".join(format_fraction(c) for c in corners)
    return f"root({format_poly(a.poly)}; {text})"


def _format_symbol(sym: "S.Symbol") -> str:
    if isinstance(sym, S.ExpSymbol):
        return f"exp({format_algebraic(sym.exponent)})"
    if isinstance(sym, S.LogPrimeSymbol):
        return f"log({sym.prime})"
    if isinstance(sym, S.LogAlgSymbol):
        return f"log({format_algebraic(sym.argument)})"
    if isinstance(sym, S.PiSymbol):
        return "pi"
    return sym.name


def format_element(e: "E.Element") -> str:
    parts: list[str] = []
    for sym, c in e.terms:
        body = _format_symbol(sym)
        if c.is_one():
            text = body
        elif c == GaussianRational(-1):
            text = f"-{body}"
        else:
            text = f"{format_gaussian(c, as_factor=True)}*{body}"
        if not parts:
            parts.append(text)
        else:
            parts.append(_joined(text))
    if not e.alg_part.is_zero():
        g = e.alg_part.as_gaussian()
        if g is not None:
            text = format_gaussian(g)
        else:
            text = format_algebraic(e.alg_part)
        if not parts:
            parts.append(text)
        else:
            parts.append(_joined(text))
    if not parts:
        return "0"
    return " ".join(parts)


def _joined(text: str) -> str:
    if text.startswith("-"):
        return f"- {text[1:]}"
    return f"+ {text}"


def format_group(G: "G_mod.FGGroup") -> str:
    return ", ".join(format_element(g) for g in G.generators)
