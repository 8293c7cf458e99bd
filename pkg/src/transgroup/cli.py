"""The `tg` command line: certify, classify, member, cyclic, small,
relations, sample, and a hidden oracle subcommand for fixture work.

Every subcommand prints one JSON document (schema "tg/1").  Exit codes:
0 = answered (Unknown is an answer), 2 = parse/usage error, 3 = budget
exhausted (precision or search).
"""

from __future__ import annotations

import json
import sys
import time
from fractions import Fraction

import click

from . import groups as G_mod
from . import oracle as O_mod
from . import parser as P
from . import smallelem as SE
from . import symbols as S
from . import topology as T_mod
from .errors import (
    ParseError,
    PrecisionExhausted,
    SearchExhausted,
    SemanticError,
    TransgroupError,
)
from .intervals import Box, RealInterval

SCHEMA = "tg/1"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3


def _algebraic_json(a):
    """Structured form: annihilator coefficients plus exact box corners."""
    re_lo, re_hi, im_lo, im_hi = a.box().corners_fractions()
    flat = []
    for c in (re_lo, re_hi, im_lo, im_hi):
        flat.extend((c.numerator, c.denominator))
    return {"poly": list(a.poly), "box": flat}


def _interval_json(iv: RealInterval, exact: bool):
    out = {"dec": [str(iv.lo), str(iv.hi)]}
    if exact:
        out["exact"] = [
            P.format_fraction(iv.lo_fraction()),
            P.format_fraction(iv.hi_fraction()),
        ]
    return out


def _box_json(b: Box, exact: bool):
    return {"re": _interval_json(b.re, exact), "im": _interval_json(b.im, exact)}


def _emit(payload: dict, pretty: bool, started: float):
    payload["schema"] = SCHEMA
    payload["elapsed_ms"] = round(1000 * (time.monotonic() - started), 3)
    if pretty:
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        click.echo(json.dumps(payload, sort_keys=True))


def _apply_bindings(bindings):
    for spec in bindings:
        if "=" not in spec:
            raise SemanticError(f"--bind expects NAME=CONST, got {spec!r}")
        name, _, tag = spec.partition("=")
        S.bind_abstract(name.strip(), tag.strip())


def _common(fn):
    fn = click.option("--precision", "precision", default=256, show_default=True,
                      help="Working precision in bits.")(fn)
    fn = click.option("--bind", "bindings", multiple=True, metavar="NAME=CONST",
                      help="Bind an abstract symbol to e, pi or liouville.")(fn)
    fn = click.option("--json", is_flag=True, default=True, expose_value=False,
                      help="Compact JSON output (the default).")(fn)
    fn = click.option("--pretty", is_flag=True, help="Indented JSON output.")(fn)
    fn = click.option("--exact", is_flag=True,
                      help="Include exact dyadic interval endpoints.")(fn)
    return fn


def _run(fn):
    """Shared error-to-exit-code mapping around a subcommand body."""
    started = time.monotonic()
    try:
        payload, code = fn()
    except (ParseError, SemanticError) as exc:
        detail = {"error": str(exc)}
        if isinstance(exc, ParseError):
            if exc.position is not None:
                detail["position"] = exc.position
            if exc.expected:
                detail["expected"] = list(exc.expected)
        click.echo(json.dumps({"schema": SCHEMA, **detail}, sort_keys=True))
        sys.exit(EXIT_USAGE)
    except (PrecisionExhausted, SearchExhausted) as exc:
        click.echo(json.dumps({"schema": SCHEMA, "error": str(exc),
                               "exhausted": True}, sort_keys=True))
        sys.exit(EXIT_EXHAUSTED)
    except TransgroupError as exc:
        click.echo(json.dumps({"schema": SCHEMA, "error": str(exc)},
                              sort_keys=True))
        sys.exit(EXIT_USAGE)
    return payload, code, started


@click.group()
def main():
    """Certify and classify finitely generated transcendental subgroups of C."""


@main.command()
@click.argument("group_text")
@click.option("--height", default=G_mod.DEFAULT_RELATION_HEIGHT, show_default=True,
              help="No-relation search height for Unknown verdicts.")
@_common
def certify(group_text, height, precision, bindings, pretty, exact):
    """Certify that every nonzero element of GROUP_TEXT is transcendental."""

    def body():
        _apply_bindings(bindings)
        G = P.parse_group(group_text)
        v = G_mod.certify(G, relation_height=height, relation_bits=precision)
        payload = {"verdict": v.tag, "precision_bits": precision}
        if v.is_refuted():
            payload["witness"] = {
                "coeffs": list(v.witness_coeffs),
                "value": P.format_algebraic(v.witness_value),
            }
            if exact:
                payload["witness"]["value_alg"] = _algebraic_json(v.witness_value)
        if v.is_unknown():
            payload["reason"] = v.reason.value
            payload["no_relation_height"] = v.no_relation_height
        return payload, EXIT_OK

    payload, code, started = _run(body)
    _emit(payload, pretty, started)
    sys.exit(code)


@main.command()
@click.argument("group_text")
@click.option("--eps", default="1/1000", show_default=True,
              help="Witness size target for QLike verdicts.")
@_common
def classify(group_text, eps, precision, bindings, pretty, exact):
    """Classify GROUP_TEXT into Trivial / Z / ZxZ / QLike."""

    def body():
        _apply_bindings(bindings)
        G = P.parse_group(group_text)
        cls = T_mod.classify(G, witness_eps=Fraction(eps))
        rank = cls.rank
        payload = {
            "class": cls.tag,
            "precision_bits": precision,
            "rank": rank.rank if rank is not None else None,
            "rank_exact": rank.exact if rank is not None else None,
            "span_dim": cls.span if cls.span is not None else "unknown",
        }
        payload["min_norm"] = (
            _interval_json(cls.min_norm, exact) if cls.min_norm else None
        )
        payload["witness"] = P.format_element(cls.witness) if cls.witness else None
        if cls.witness_box is not None:
            payload["witness_box"] = _box_json(cls.witness_box, exact)
        if cls.reason is not None:
            payload["reason"] = cls.reason.value
        return payload, EXIT_OK

    payload, code, started = _run(body)
    _emit(payload, pretty, started)
    sys.exit(code)


@main.command()
@click.argument("group_text")
@click.argument("element_text")
@_common
def member(group_text, element_text, precision, bindings, pretty, exact):
    """Decide membership of ELEMENT_TEXT in GROUP_TEXT."""

    def body():
        _apply_bindings(bindings)
        G = P.parse_group(group_text)
        x = P.parse_element(element_text)
        r = G_mod.member(G, x)
        payload = {"member": r.tag, "precision_bits": precision}
        if r.coeffs is not None:
            payload["coeffs"] = list(r.coeffs)
        if r.reason is not None:
            payload["reason"] = r.reason.value
        return payload, EXIT_OK

    payload, code, started = _run(body)
    _emit(payload, pretty, started)
    sys.exit(code)


@main.command()
@click.argument("a_text")
@click.argument("b_text")
@_common
def cyclic(a_text, b_text, precision, bindings, pretty, exact):
    """Is gp{A, B} cyclic?  Reports the primitive generator if so."""

    def body():
        _apply_bindings(bindings)
        a = P.parse_element(a_text)
        b = P.parse_element(b_text)
        r = G_mod.is_cyclic_pair(a, b)
        payload = {"precision_bits": precision}
        if r.tag == r.CYCLIC:
            payload["cyclic"] = True
            payload["generator"] = P.format_element(r.generator)
        elif r.tag == r.NOT_CYCLIC:
            payload["cyclic"] = False
        else:
            payload["cyclic"] = "unknown"
            if r.reason is not None:
                payload["reason"] = r.reason.value
        return payload, EXIT_OK

    payload, code, started = _run(body)
    _emit(payload, pretty, started)
    sys.exit(code)


@main.command()
@click.argument("group_text")
@click.option("--eps", default="1/100", show_default=True,
              help="Target absolute value.")
@click.option("--height", default=10**9, show_default=True,
              help="Coefficient height cap.")
@click.option("--max-bits", default=1024, show_default=True,
              help="Precision ladder cap.")
@_common
def small(group_text, eps, height, max_bits, precision, bindings, pretty, exact):
    """Find a nonzero element of GROUP_TEXT with |value| < eps."""

    def body():
        _apply_bindings(bindings)
        G = P.parse_group(group_text)
        x = SE.small_element(G, Fraction(eps), height_cap=height,
                             max_bits=max_bits)
        box = x.eval_box(precision)
        m = G_mod.member(G, x)
        payload = {
            "element": P.format_element(x),
            "coeffs": list(m.coeffs) if m.coeffs is not None else None,
            "abs": _interval_json(box.abs_interval(precision + 8), exact),
            "precision_bits": precision,
        }
        return payload, EXIT_OK

    payload, code, started = _run(body)
    _emit(payload, pretty, started)
    sys.exit(code)


@main.command()
@click.argument("element_texts", nargs=-1, required=True)
@click.option("--height", default=G_mod.DEFAULT_RELATION_HEIGHT, show_default=True)
@_common
def relations(element_texts, height, precision, bindings, pretty, exact):
    """Search for an integer relation among the ELEMENT values."""

    def body():
        _apply_bindings(bindings)
        values = [P.parse_element(t) for t in element_texts]
        rep = SE.relation_search(values, height, precision)
        payload = {"precision_bits": rep.bits}
        if rep.relation is None:
            payload["relation"] = None
            payload["no_relation_height"] = rep.height
        else:
            payload["relation"] = list(rep.relation)
            payload["certified"] = rep.certified
            if rep.value_box is not None:
                payload["value_box"] = _box_json(rep.value_box, exact)
        return payload, EXIT_OK

    payload, code, started = _run(body)
    _emit(payload, pretty, started)
    sys.exit(code)


@main.command()
@click.argument("group_text")
@click.option("--coeff-bound", default=5, show_default=True,
              help="Enumerate all |m_j| <= bound.")
@_common
def sample(group_text, coeff_bound, precision, bindings, pretty, exact):
    """Emit the lattice points sum m_j g_j for plotting elsewhere."""

    def body():
        _apply_bindings(bindings)
        G = P.parse_group(group_text)
        from itertools import product

        k = len(G.generators)
        boxes = [g.eval_box(precision) for g in G.generators]
        prec = precision + 8
        points = []
        from .rationals import GaussianRational

        for m in product(range(-coeff_bound, coeff_bound + 1), repeat=k):
            total = Box.point(0, 0)
            for mj, b in zip(m, boxes):
                if mj:
                    total = total.add(
                        b.scale_gaussian(GaussianRational(mj), prec), prec
                    )
            re_mid, im_mid = total.mid_fractions()
            points.append({
                "m": list(m),
                "re": f"{float(re_mid):.17g}",
                "im": f"{float(im_mid):.17g}",
            })
        return {"points": points, "count": len(points),
                "precision_bits": precision}, EXIT_OK

    payload, code, started = _run(body)
    _emit(payload, pretty, started)
    sys.exit(code)


@main.group(hidden=True)
def oracle():
    """Brute-force fixtures (slow, exhaustive)."""


@oracle.command("member")
@click.argument("group_text")
@click.argument("element_text")
@click.option("--bound", default=10, show_default=True)
@_common
def oracle_member(group_text, element_text, bound, precision, bindings, pretty,
                  exact):
    def body():
        _apply_bindings(bindings)
        G = P.parse_group(group_text)
        x = P.parse_element(element_text)
        r = O_mod.brute_member(G, x, bound)
        payload = {"found": r.found, "bound": bound}
        if r.found:
            payload["coeffs"] = list(r.coeffs)
        return payload, EXIT_OK

    payload, code, started = _run(body)
    _emit(payload, pretty, started)
    sys.exit(code)


@oracle.command("minnorm")
@click.argument("group_text")
@click.option("--bound", default=25, show_default=True)
@_common
def oracle_minnorm(group_text, bound, precision, bindings, pretty, exact):
    def body():
        _apply_bindings(bindings)
        G = P.parse_group(group_text)
        m, enc = O_mod.brute_min_norm(G, bound, bits=precision)
        return {"coeffs": list(m), "abs": _interval_json(enc, exact),
                "bound": bound}, EXIT_OK

    payload, code, started = _run(body)
    _emit(payload, pretty, started)
    sys.exit(code)


@oracle.command("small")
@click.argument("group_text")
@click.option("--eps", default="1/100", show_default=True)
@click.option("--bound", default=25, show_default=True)
@_common
def oracle_small(group_text, eps, bound, precision, bindings, pretty, exact):
    def body():
        _apply_bindings(bindings)
        G = P.parse_group(group_text)
        res = O_mod.brute_small(G, Fraction(eps), bound, bits=precision)
        if res is None:
            return {"found": False, "bound": bound}, EXIT_OK
        m, enc = res
        return {"found": True, "coeffs": list(m),
                "abs": _interval_json(enc, exact), "bound": bound}, EXIT_OK

    payload, code, started = _run(body)
    _emit(payload, pretty, started)
    sys.exit(code)


if __name__ == "__main__":
    main()
