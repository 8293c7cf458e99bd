"""Acceptance suite: one test per criterion, one printed verdict line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every tolerance is pinned here, nothing is deferred.
"""

import itertools
import random
import time
from fractions import Fraction
from math import gcd

from transgroup import algebraic as alg
from transgroup import elements as E
from transgroup import groups as G
from transgroup import oracle as O
from transgroup import smallelem as SE
from transgroup import topology as T
from transgroup.rationals import GaussianRational

from conftest import E_110, PI_110, contains_digits


def _report(n: int, text: str):
    print(f"\nACCEPTANCE {n:2d} PASS: {text}")


# ---------------------------------------------------------------------------
# 1. Trichotomy on a 300-group corpus
# ---------------------------------------------------------------------------


def _single_generator_corpus(rng, n):
    out = []
    for i in range(n):
        kind = i % 5
        c = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        if kind == 0:
            out.append(G.exp_group([c]))
        elif kind == 1:
            out.append(G.group_make([E.log_element(rng.choice([2, 3, 5, 7, 11]), c)]))
        elif kind == 2:
            out.append(G.group_make([E.pi_element(c)]))
        elif kind == 3:
            out.append(G.group_make([E.t_element(f"Ta1_{i}", c)]))
        else:
            out.append(G.exp_group([GaussianRational(rng.randint(1, 5),
                                                     rng.randint(1, 5))]))
    return out


def _zxz_corpus(rng, n):
    out = []
    for i in range(n):
        kind = i % 4
        if kind == 0:
            out.append(G.pair_group(f"Ta2_{i}"))
        elif kind == 1:
            out.append(G.pair_group(f"Ta2b_{i}",
                                    binding=rng.choice(["e", "pi", "liouville"])))
        elif kind == 2:
            q = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            out.append(G.exp_group([q, GaussianRational(0, rng.randint(1, 5))]))
        else:
            c = GaussianRational(0, Fraction(rng.randint(1, 5)))
            out.append(G.group_make([
                E.exp_element(i + 1),
                E.exp_element(i + 1, c),
            ]))
    return out


def _qlike_corpus(rng, n):
    primes = [2, 3, 5, 7, 11, 13]
    out = []
    for i in range(n):
        kind = i % 3
        if kind == 0:
            ps = rng.sample(primes, rng.randint(2, 3))
            out.append(G.log_group(ps + [ps[0] * ps[1]]))
        elif kind == 1:
            exps = set()
            while len(exps) < 3:
                exps.add(Fraction(rng.randint(1, 30), rng.randint(1, 4)))
            out.append(G.exp_group(sorted(exps)))
        else:
            q = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            out.append(G.exp_group([q, GaussianRational(0, 1),
                                    GaussianRational(0, 2)]))
    return out


def test_criterion_01_trichotomy_corpus():
    rng = random.Random(20240601)
    started = time.monotonic()
    mismatches = []
    unknowns = []
    cases = (
        [(g, "Z") for g in _single_generator_corpus(rng, 100)]
        + [(g, "ZxZ") for g in _zxz_corpus(rng, 100)]
        + [(g, "QLike") for g in _qlike_corpus(rng, 100)]
    )
    assert len(cases) == 300
    for g, expect in cases:
        got = T.classify(g).tag
        if got == "Unknown":
            unknowns.append(g)
        elif got != expect:
            mismatches.append((g, expect, got))
    elapsed = time.monotonic() - started
    assert not mismatches, mismatches[:3]
    assert not unknowns, unknowns[:3]
    assert elapsed < 120, f"corpus took {elapsed:.1f}s"
    _report(1, f"300-group trichotomy, 0 mismatches, 0 unknowns, {elapsed:.1f}s")


# ---------------------------------------------------------------------------
# 2. Gaussian-pair minimal norm bound
# ---------------------------------------------------------------------------


def test_criterion_02_pair_min_norm_bound():
    g = G.pair_group("Tacc2", binding="e")
    enc = T.min_norm(g, bound=100, bits=128)
    assert contains_digits(enc, E_110)
    assert enc.width_fraction() < Fraction(1, 10**20)
    m, brute_enc = O.brute_min_norm(g, 100, bits=128)
    assert enc.overlaps(brute_enc)
    assert sum(v * v for v in m) == 1
    # |m a + n a i| = sqrt(m^2 + n^2) |a| >= |a| for every nonzero (m, n)
    boxes = [x.eval_box(96) for x in g.generators]
    prec = 104
    e_lo, e_hi = enc.lo, enc.hi
    for mm, nn in itertools.product(range(-100, 101), repeat=2):
        if not (mm or nn):
            continue
        z = boxes[0].scale_gaussian(GaussianRational(mm), prec).add(
            boxes[1].scale_gaussian(GaussianRational(nn), prec), prec
        )
        a = z.abs_interval(prec)
        assert not a.hi < e_lo, (mm, nn)
        if mm * mm + nn * nn > 1:
            assert a.lo > e_hi, (mm, nn)
    _report(2, "min_norm(gp{a, ai}) = |a| certified against |m|,|n| <= 100")


# ---------------------------------------------------------------------------
# 3. The t, t+1 refutation
# ---------------------------------------------------------------------------


def test_criterion_03_refutation_speed():
    t = E.t_element("Tacc3")
    grp = G.group_make([t, t + E.algebraic_element(1)])
    t0 = time.perf_counter()
    v = G.certify(grp)
    elapsed_ms = 1000 * (time.perf_counter() - t0)
    assert v.is_refuted()
    assert v.witness_coeffs == (-1, 1)
    assert v.witness_value.as_gaussian() == GaussianRational(1)
    replay = G.combine(grp, v.witness_coeffs).transcendence()
    assert replay.is_refuted() and alg.equals(replay.value, v.witness_value)
    assert elapsed_ms < 10, f"{elapsed_ms:.2f} ms"
    _report(3, f"gp{{t, t+1}} refuted with witness (-1, 1) -> 1 in {elapsed_ms:.2f} ms")


# ---------------------------------------------------------------------------
# 4. Exp and log certification en masse
# ---------------------------------------------------------------------------


def _exponent_pool():
    pool = [
        alg.from_fraction(Fraction(p, q))
        for p, q in [(1, 1), (2, 1), (3, 1), (-1, 2), (5, 3), (7, 4), (-3, 5)]
    ]
    pool += [
        alg.from_gaussian(GaussianRational(a, b))
        for a, b in [(0, 1), (0, 2), (1, 1), (2, -1), (-1, 3)]
    ]
    pool += [alg.sqrt_fraction(q) for q in (2, 3, 5, Fraction(7, 2))]
    pool += [alg.sqrt_fraction(q) for q in (-2, -5)]
    # quartic irrationalities: x^4 = c (degree 4)
    pool.append(alg.make((-3, 0, 0, 0, 1), (1, 2, 0, 0)))    # 3^(1/4)
    pool.append(alg.make((-5, 0, 0, 0, 1), (1, 2, 0, 0)))    # 5^(1/4)
    pool.append(alg.make((1, 0, 0, 0, 1), (0, 1, 0, 1)))     # primitive 8th root
    pool.append(alg.make((-1, -1, 0, 0, 1), (1, 2, 0, 0)))   # quartic x^4-x-1
    return pool


def test_criterion_04_exp_log_certification():
    rng = random.Random(777)
    pool = _exponent_pool()
    bad = []
    for i in range(50):
        k = rng.randint(2, 4)
        exponents = rng.sample(pool, k)
        v = G.certify(G.exp_group(exponents))
        if not v.is_certified():
            bad.append(("exp", i, v.tag))
    forced = [[2, 3, 6], [4, 8], [10, 100, 1000], [2, 3, 6, 36]]
    for i in range(50):
        if i < len(forced):
            args = forced[i]
        else:
            k = rng.randint(2, 5)
            args = [Fraction(rng.randint(1, 1000), rng.randint(1, 1000))
                    for _ in range(k)]
        v = G.certify(G.log_group(args))
        if not v.is_certified():
            bad.append(("log", i, v.tag))
    assert not bad, bad[:5]
    _report(4, "50 exp groups + 50 log groups all certified, 0 refuted, 0 unknown")


# ---------------------------------------------------------------------------
# 5. Cyclicity grid
# ---------------------------------------------------------------------------


def test_criterion_05_cyclicity():
    rats = sorted({
        Fraction(p, q)
        for q in range(1, 13)
        for p in range(-12, 13)
        if p and gcd(abs(p), q) == 1
    })
    name = "Tacc5"
    checked = 0
    for a in rats:
        ea = E.t_element(name, a)
        for b in rats:
            eb = E.t_element(name, b)
            r = G.is_cyclic_pair(ea, eb)
            assert r.is_cyclic(), (a, b)
            _, coeff = r.generator.single_term()
            expect = Fraction(
                gcd(abs(a.numerator * b.denominator),
                    abs(b.numerator * a.denominator)),
                a.denominator * b.denominator,
            )
            assert abs(coeff.re) == expect and coeff.im == 0, (a, b)
            assert G.member(G.group_make([r.generator]), ea).is_yes()
            assert G.member(G.group_make([r.generator]), eb).is_yes()
            checked += 1
    pool = _exponent_pool()[:20]
    not_cyclic = 0
    for i in range(len(pool)):
        for j in range(i + 1, len(pool)):
            r = G.is_cyclic_pair(E.exp_element(pool[i]), E.exp_element(pool[j]))
            assert r.tag == "not_cyclic", (i, j, r.tag)
            not_cyclic += 1
    _report(5, f"{checked} rational pairs cyclic with gcd generator, "
               f"{not_cyclic} exp pairs not cyclic")


# ---------------------------------------------------------------------------
# 6. Non-discreteness witnesses
# ---------------------------------------------------------------------------


def test_criterion_06_small_witness_ladder():
    lines = []
    for grp, label in ((G.log_group([2, 3]), "log{2,3}"),
                       (G.exp_group([1, Fraction(1, 2)]), "exp{1,1/2}")):
        for k in range(1, 7):
            eps = Fraction(1, 10**k)
            t0 = time.monotonic()
            x = SE.small_element(grp, eps, max_bits=1024)
            dt = time.monotonic() - t0
            assert dt < 30, (label, k, dt)
            assert x.is_zero().is_false()
            box = x.eval_box(256)
            assert not box.contains_zero()
            assert box.abs_interval(264).hi_fraction() < eps
            assert G.member(grp, x).is_yes()
            lines.append(f"{label}@1e-{k}")
    _report(6, f"witnesses for {', '.join(lines[:3])} ... down to 1e-6, all < 30s")


# ---------------------------------------------------------------------------
# 7. Open-problem honesty
# ---------------------------------------------------------------------------


def test_criterion_07_e_pi_unknown():
    grp = G.group_make([E.exp_element(1), E.pi_element()])
    v = G.certify(grp, relation_height=10**6, relation_bits=512)
    assert v.is_unknown()
    assert not v.is_certified() and not v.is_refuted()
    assert v.no_relation_height >= 10**6
    rep = SE.relation_search([E.exp_element(1), E.pi_element()], 10**6, 512)
    assert rep.relation is None and rep.height >= 10**6
    _report(7, "gp{e, pi} stays Unknown; no relation up to H = 10^6 at 512 bits")


# ---------------------------------------------------------------------------
# 8. Membership vs brute force
# ---------------------------------------------------------------------------


def _random_instance(rng, idx):
    k = rng.randint(1, 4)
    name = f"Tacc8_{idx}"
    gens = []
    for _ in range(k):
        c = GaussianRational(
            Fraction(rng.randint(-10, 10) or 1, rng.randint(1, 10)),
            Fraction(rng.randint(-4, 4), rng.randint(1, 4))
            if rng.random() < 0.3 else 0,
        )
        kind = rng.randrange(4)
        if kind == 0:
            gens.append(E.t_element(name, c))
        elif kind == 1:
            gens.append(E.log_element(rng.choice([2, 3, 5]), c))
        elif kind == 2:
            gens.append(E.exp_element(rng.randint(1, 3), c))
        else:
            gens.append(E.pi_element(c))
    grp = G.group_make(gens)
    roll = rng.random()
    if roll < 0.5:
        # member with a witness inside the oracle horizon
        m = [rng.randint(-6, 6) for _ in range(k)]
        x = G.combine(grp, m)
    elif roll < 0.75:
        # a symbol foreign to the group: never a member
        x = E.t_element(f"{name}_out", Fraction(rng.randint(1, 9)))
        if rng.random() < 0.5:
            x = x + G.combine(grp, [rng.randint(-3, 3) for _ in range(k)])
    else:
        # small perturbation of a generator; membership varies but any
        # witness stays within the enumerated box
        x = gens[rng.randrange(k)].scale(rng.randint(2, 6))
        if rng.random() < 0.5:
            x = x + gens[rng.randrange(k)]
    return grp, x


def test_criterion_08_member_vs_brute():
    rng = random.Random(31337)
    disagreements = []
    for idx in range(500):
        grp, x = _random_instance(rng, idx)
        got = G.member(grp, x)
        assert not got.is_unknown()
        brute = O.brute_member(grp, x, 25)
        if got.is_yes() != brute.found:
            disagreements.append((idx, got.tag, brute.found))
            continue
        if got.is_yes():
            assert G.combine(grp, got.coeffs) == x
            assert G.combine(grp, brute.coeffs) == x
    assert not disagreements, disagreements[:5]
    _report(8, "member agrees with brute_member on 500 random instances")


# ---------------------------------------------------------------------------
# 9. Torsion-freeness
# ---------------------------------------------------------------------------


def _random_element(rng, idx):
    roll = rng.random()
    if roll < 0.08:
        return E.zero_element()
    if roll < 0.16:
        # a canonical cancellation: log(pq) - log p - log q = 0
        p, q = rng.sample([2, 3, 5, 7], 2)
        return E.log_element(p * q) - E.log_element(p) - E.log_element(q)
    if roll < 0.24:
        # semi-decided: rational multiples of log sqrt2 against log 2
        r2 = alg.sqrt_fraction(2)
        n = rng.randint(1, 3)
        return E.log_element(r2, 2 * n) - E.log_element(2, n)
    terms = []
    for _ in range(rng.randint(1, 3)):
        c = GaussianRational(Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 9)),
                             Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        kind = rng.randrange(4)
        if kind == 0:
            terms.append(E.exp_element(rng.randint(1, 4), c))
        elif kind == 1:
            terms.append(E.log_element(rng.choice([2, 3, 5, 7]), c))
        elif kind == 2:
            terms.append(E.pi_element(c))
        else:
            terms.append(E.t_element(f"Tacc9_{idx % 25}", c))
    total = E.algebraic_element(Fraction(rng.randint(-5, 5), rng.randint(1, 5)))
    for t in terms:
        total = total + t
    return total


def test_criterion_09_torsion_freeness():
    rng = random.Random(55555)
    for idx in range(1000):
        x = _random_element(rng, idx)
        base = x.is_zero()
        for n in range(2, 21):
            scaled = x.scale(n).is_zero()
            assert scaled.value == base.value, (idx, n, base, scaled)
    _report(9, "is_zero(n*x) = is_zero(x) for 1000 elements, n in 2..20")


# ---------------------------------------------------------------------------
# 10. Interval soundness
# ---------------------------------------------------------------------------


def test_criterion_10_interval_soundness():
    from transgroup.intervals import (
        Box, RealInterval, exp_interval, log_interval, pi_interval,
    )

    # 100+ digit constants, computed independently and frozen in conftest
    e_box = exp_interval(RealInterval.point(1), 400)
    assert contains_digits(e_box, E_110)
    pi_iv = pi_interval(400)
    assert contains_digits(pi_iv, PI_110)
    rng = random.Random(2468)
    prev_widths = None
    for bits in (32, 64, 128, 256, 512, 1024):
        # known-zero stress
        l2 = log_interval(RealInterval.point(2), bits)
        l3 = log_interval(RealInterval.point(3), bits)
        l6 = log_interval(RealInterval.point(6), bits)
        s = l2.add(l3, bits + 8).sub(l6, bits + 8)
        assert s.contains_zero(), bits
        # monotone refinement
        widths = (exp_interval(RealInterval.point(1), bits).width_fraction(),
                  pi_interval(bits).width_fraction())
        if prev_widths is not None:
            assert widths[0] <= prev_widths[0] and widths[1] <= prev_widths[1]
        prev_widths = widths
        # containment: double-precision values sit inside coarse boxes
        for _ in range(10):
            a = Fraction(rng.randint(-400, 400), rng.randint(1, 40))
            b = Fraction(rng.randint(-400, 400), rng.randint(1, 40))
            coarse = Box.from_fractions(a, b, bits).mul(
                Box.from_fractions(b, a, bits), bits
            )
            fine = Box.from_fractions(a, b, 2 * bits).mul(
                Box.from_fractions(b, a, 2 * bits), 2 * bits
            )
            assert coarse.contains_box(fine), bits
    _report(10, "containment, monotone refinement, zero stress (32..1024 bits), "
                "e/pi match 110-digit constants")
