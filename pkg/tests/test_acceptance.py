"""Acceptance criteria, one test each. Every test prints a single PASS/FAIL line.

Expected values come from tests/_oracles.py or from literal tables; the
library is only ever the thing under test.
"""

from __future__ import annotations

import random
import time
from itertools import product

import pytest

import _oracles as O
from periplex import oracle, piclass
from periplex.characters import verify_flag_identity
from periplex.partitions import Bipartition, enumerate_brp, to_sign_form
from periplex.periplectic import (
    borel_included,
    borel_odd_dim,
    borel_odd_roots,
    decompose,
    parabolic_included,
    pe,
    pi_predicates,
    reverse_label,
    ringel_weight_map,
    standard_label,
    zeta,
)
from periplex.weights import Weight


@pytest.fixture
def record(capsys):
    def _record(num: int, title: str, ok: bool, elapsed: float, budget: float, note: str = ""):
        timely = elapsed < budget
        verdict = "PASS" if ok and timely else "FAIL"
        extra = f"; {note}" if note else ""
        with capsys.disabled():
            print(f"\n{verdict} [{num:2d}] {title} ({elapsed:.2f}s, budget {budget:g}s{extra})")
        assert ok, f"criterion {num} failed{extra}"
        assert timely, f"criterion {num} took {elapsed:.2f}s, budget {budget}s"

    return _record


def _bp(x: Bipartition):
    return (tuple(x.mu), tuple(x.nu))


def test_borel_census(record):
    t = time.perf_counter()
    counts = {n: len(enumerate_brp(n, "BRP00")) for n in range(1, 11)}
    # small ranks also against the membership definition
    brute = {n: len(O.brp_by_definition(n)["BRP00"]) for n in range(1, 6)}
    ok = all(counts[n] == 2**n for n in counts) and all(brute[n] == 2**n for n in brute)
    record(1, "Borel census |BRP00_n| = 2^n, n = 1..10", ok, time.perf_counter() - t, 1)


def test_rank_two_atlas(record):
    t = time.perf_counter()
    brp0 = {((2, 1), ()), ((2,), (1,)), ((1,), (2,)), ((), (2, 1)), ((1, 1), ()), ((), (1, 1))}
    brp00 = {((2, 1), ()), ((2,), (1,)), ((1,), (2,)), ((), (2, 1))}
    got0 = [_bp(x) for x in enumerate_brp(2, "BRP0")]
    got00 = [_bp(x) for x in enumerate_brp(2, "BRP00")]
    ok = set(got0) == brp0 and len(got0) == 6 and set(got00) == brp00 and len(got00) == 4
    record(2, "rank-two atlas BRP0_2 and BRP00_2", ok, time.perf_counter() - t, 1)


def test_classification_bijection(record):
    t = time.perf_counter()
    notes, ok = [], True
    for n in (1, 2, 3):
        rep = oracle.verify_classification(n)
        defs = O.brp_by_definition(n)
        want = (len(defs["BRP"]), len(defs["BRP0"]), 2**n)
        # distinct splits of the roots over integer grids, computed without periplex
        seen = {b: {O.split(d, n) for d in O.integer_grid(n, b)} for b in (n + 2, n + 3)}
        reduced = {s for s in seen[n + 2] if all(r[1] == 0 for r in s[1])}
        borel = {s for s in seen[n + 2] if not s[1]}
        got = (len(seen[n + 2]), len(reduced), len(borel))
        images = {O.split(O.zeta_of(mu, nu, n), n) for mu, nu in defs["BRP"]}
        ok &= rep.ok and got == want and seen[n + 2] == seen[n + 3] and images == seen[n + 2]
        notes.append(f"n={n}: {got}")
    record(3, "classification bijection with grid stability", ok, time.perf_counter() - t, 30, ", ".join(notes))


def test_worked_decompositions(record):
    t = time.perf_counter()
    n = 2
    e = lambda *c: (tuple(c), 0)
    o = lambda *c: (tuple(c), 1)
    uminus = {e(-1, 1), o(-1, -1)}
    a = decompose(zeta(Bipartition((2, 1), ()), n), n)
    b = decompose(zeta(Bipartition((1,), ()), n), n)
    ok = (
        O.as_pairs(a.uminus) == uminus
        and not a.levi
        and O.as_pairs(a.uplus) == {e(1, -1), o(2, 0), o(1, 1), o(0, 2)}
        and O.as_pairs(b.uminus) == uminus
        and O.as_pairs(b.levi) == {o(0, 2)}
        and O.as_pairs(b.uplus) == {e(1, -1), o(2, 0), o(1, 1)}
        and a.parabolic == b.parabolic
    )
    record(4, "worked decompositions at n = 2 share one parabolic", ok, time.perf_counter() - t, 1)


def test_borel_root_sets(record):
    t = time.perf_counter()
    ok = True
    for n in range(1, 7):
        s, r = standard_label(n), reverse_label(n)
        ok &= O.as_pairs(borel_odd_roots(s, n)) == O.standard_odd(n)
        ok &= O.as_pairs(borel_odd_roots(r, n)) == O.reverse_odd(n)
        ok &= borel_odd_dim(s, n) == n * (n + 1) // 2 and borel_odd_dim(r, n) == n * (n - 1) // 2
    for n in range(1, 6):
        for mu, nu in O.brp_by_definition(n)["BRP00"]:
            x = Bipartition(mu, nu)
            by_sign = {rt for rt in O.parabolic(O.zeta_of(mu, nu, n), n) if rt[1] == 1}
            ok &= O.as_pairs(borel_odd_roots(x, n)) == by_sign
    record(5, "Borel odd root sets and dimensions", ok, time.perf_counter() - t, 5)


def test_order_agreement(record):
    t = time.perf_counter()
    ok, pairs = True, 0
    for n in range(1, 5):
        ok &= oracle.verify_orders(n).ok
        borels = enumerate_brp(n, "BRP00")
        odd = {x: {rt for rt in O.parabolic(O.zeta_of(x.mu, x.nu, n), n) if rt[1]} for x in borels}
        for x, y in product(borels, borels):
            ok &= borel_included(x, y) == (odd[x] < odd[y])
        forms = [to_sign_form(x) for x in enumerate_brp(n, "BRP0")]
        # sign form → (μ, ν) by reading f, then the root set by the sign test
        plus = lambda s, sign: tuple(k for k, c in zip(s.kappa, s.f) if c == sign)
        roots = {s: O.parabolic(O.zeta_of(plus(s, "+"), plus(s, "-"), n), n) for s in forms}
        for s, u in product(forms, forms):
            ok &= parabolic_included(s, u) == (roots[s] <= roots[u])
            pairs += 1
    record(6, "inclusion orders equal root-set inclusion, n <= 4", ok, time.perf_counter() - t, 30, f"{pairs} parabolic pairs")


def test_ringel_suite(record):
    t = time.perf_counter()
    ok = True
    for n in range(1, 6):
        ok &= oracle.verify_ringel_suite(n, samples=100).ok
        rng = random.Random(n)
        bs = to_sign_form(standard_label(n))
        rho0 = O.rho_even_positive(n)
        for _ in range(100):
            lam = tuple(rng.randint(-8, 8) for _ in range(n))
            closed = tuple(-l - 2 * r - (1 - n) for l, r in zip(lam, rho0))
            img = ringel_weight_map(bs, Weight(lam))
            ok &= img == Weight(closed) and ringel_weight_map(bs, img) == Weight(lam)
    record(7, "Ringel map involution and closed form, n <= 5", ok, time.perf_counter() - t, 5)


def test_spo_oracle_equivalence(record):
    t = time.perf_counter()
    ok, counted = True, []
    for n, m in ((1, 1), (1, 2), (2, 1), (2, 2)):
        b = m + n + 2
        basic = 0
        for c in product(range(-b, b + 1), repeat=n + m):
            lam, mu = c[:n], c[n:]
            want = piclass.pi_spo_even(n, m, lam, mu)
            ok &= want == piclass.pi_spo_even_rho(n, m, lam, mu)
            if piclass.spo_basic(n, m, lam, mu):
                basic += 1
                ok &= want == (piclass.spo_even_oracle(n, m, lam, mu) < 0)
        counted.append(f"({n},{m}): {basic}")
    record(8, "spo(2n|2m) criterion, reflection oracle and shifted form agree", ok,
           time.perf_counter() - t, 60, "basic weights " + ", ".join(counted))


def test_flag_identity(record):
    t = time.perf_counter()
    ok, runs = True, 0
    for n in (1, 2, 3):
        rng = random.Random(f"accept:{n}")
        lams = [Weight.zero(n)] + [Weight(tuple(rng.randint(-3, 3) for _ in range(n))) for _ in range(2)]
        for x in enumerate_brp(n, "BRP00"):
            for lam in lams:
                ok &= bool(verify_flag_identity(x, lam, 6, n))
                runs += 1
    record(9, "flag identity for every Borel, n <= 3, depth 6", ok, time.perf_counter() - t, 60, f"{runs} runs")


def test_cross_module_consistency(record):
    t = time.perf_counter()
    from periplex.piclass import pi_type_one

    ok = True
    for n in range(1, 5):
        g, bs = pe(n), standard_label(n)
        for c in product(range(-3, 4), repeat=n):
            increasing = all(c[i] < c[i + 1] for i in range(n - 1))
            lam = Weight(c)
            ok &= pi_type_one(g, lam) == pi_predicates(bs, lam, n).injective == increasing
    bs = standard_label(2)
    for a, b in product(range(-6, 7), repeat=2):
        want = a < b and a + b == -1
        ok &= pi_predicates(bs, (a, b), 2).selfdual == want
    record(10, "type-I test matches standard-Borel injectivity; self-dual set at n = 2", ok, time.perf_counter() - t, 5)
