"""Brute-force cross-checks of the classification and weight-map machinery.

Every ``verify_*`` function returns a :class:`Report`: a list of named
checks with counterexamples. Reports are deterministic.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, product

from .characters import verify_flag_identity
from .partitions import enumerate_brp, from_sign_form, to_sign_form
from .periplectic import (
    ParabolicDecomposition,
    borel_included,
    borel_odd_roots,
    borel_roots,
    canonicalize,
    decompose,
    duality_weight_map,
    hat_dual,
    levi_blocks,
    longest_element,
    parabolic_included,
    pe,
    pi_predicates,
    reduced_parabolic,
    ringel_weight_map,
    rho_signed,
    standard_label,
    reverse_label,
    zeta,
)
from .weights import Root, Weight, omega, weyl_apply

__all__ = [
    "GridSpec",
    "Check",
    "Report",
    "grid",
    "enumerate_decompositions",
    "verify_classification",
    "verify_orders",
    "verify_levi_facts",
    "verify_ringel_suite",
    "verify_flags",
    "run_suite",
]


@dataclass(frozen=True)
class GridSpec:
    n: int
    bound: int
    decreasing: bool = True


def grid(spec: GridSpec):
    """Integer δ with |δ_i| ≤ bound, weakly decreasing if requested."""
    vals = range(spec.bound, -spec.bound - 1, -1)
    if spec.decreasing:
        for c in combinations_with_replacement(vals, spec.n):
            yield Weight(c)
    else:
        for c in product(vals, repeat=spec.n):
            yield Weight(c)


def _key(d: ParabolicDecomposition):
    return (d.uminus, d.levi, d.uplus)


def enumerate_decompositions(spec: GridSpec) -> dict:
    """Distinct decompositions over the grid, each with its generating δ's."""
    found: dict[tuple, list[Weight]] = {}
    for delta in grid(spec):
        found.setdefault(_key(decompose(delta, spec.n)), []).append(delta)
    return dict(sorted(found.items()))


@dataclass
class Check:
    name: str
    rank: int
    counterexamples: list = field(default_factory=list)
    detail: str = ""
    skipped: bool = False

    @property
    def status(self) -> str:
        if self.skipped:
            return "skipped"
        return "pass" if not self.counterexamples else "fail"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "rank": self.rank,
            "status": self.status,
            "detail": self.detail,
            "counterexamples": [str(c) for c in self.counterexamples],
        }


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def __add__(self, other: "Report") -> "Report":
        return Report(self.checks + other.checks)

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False)

    def table(self) -> str:
        rows = [("check", "n", "status", "detail")]
        rows += [(c.name, str(c.rank), c.status, c.detail) for c in self.checks]
        w = [max(len(r[i]) for r in rows) for i in range(4)]
        lines = ["  ".join(x.ljust(w[i]) for i, x in enumerate(r)).rstrip() for r in rows]
        lines.insert(1, "  ".join("-" * x for x in w))
        for c in self.checks:
            for ce in c.counterexamples[:10]:
                lines.append(f"  ! {c.name}: {ce}")
        return "\n".join(lines)


def verify_classification(n: int, bound: int | None = None) -> Report:
    if n > 4:
        raise ValueError("classification sweep is limited to n ≤ 4")
    bound = n + 2 if bound is None else bound
    found = enumerate_decompositions(GridSpec(n, bound))
    wider = enumerate_decompositions(GridSpec(n, bound + 1))
    brp, brp0, brp00 = (enumerate_brp(n, k) for k in ("BRP", "BRP0", "BRP00"))
    images = {_key(decompose(zeta(x, n), n)): x for x in brp}

    r = Report()
    c = Check("decomposition count equals |BRP|", n, detail=f"{len(found)} vs {len(brp)}")
    if len(found) != len(brp) or set(found) != set(images):
        c.counterexamples.append(f"grid gives {len(found)}, BRP gives {len(images)} distinct")
    r.checks.append(c)

    c = Check("grid stable under bound+1", n, detail=f"bound {bound}")
    if set(found) != set(wider):
        c.counterexamples.append(f"{len(wider) - len(found)} new decompositions at bound {bound + 1}")
    r.checks.append(c)

    c = Check("canonical label reproduces each decomposition", n)
    for key, deltas in found.items():
        for d in deltas:
            try:
                x = canonicalize(d, n)
            except (AssertionError, ValueError) as e:
                c.counterexamples.append(f"δ={d}: {e}")
                continue
            if _key(decompose(zeta(x, n), n)) != key:
                c.counterexamples.append(f"δ={d} → {x}")
    c.detail = f"{sum(len(v) for v in found.values())} generating δ"
    r.checks.append(c)

    reduced = {k for k in found if all(rt.parity == 0 for rt in k[1])}
    borels = {k for k in found if not k[1]}
    c = Check("reduced decompositions are the BRP⁰ images", n, detail=f"{len(reduced)} vs {len(brp0)}")
    if reduced != {_key(decompose(zeta(x, n), n)) for x in brp0}:
        c.counterexamples.append("reduced set differs")
    r.checks.append(c)
    c = Check("Borel decompositions are the BRP⁰⁰ images", n, detail=f"{len(borels)} vs {2 ** n}")
    if borels != {_key(decompose(zeta(x, n), n)) for x in brp00} or len(borels) != 2 ** n:
        c.counterexamples.append("Borel set differs")
    r.checks.append(c)
    return r


def verify_orders(n: int) -> Report:
    if n > 4:
        raise ValueError("order sweep is limited to n ≤ 4")
    r = Report()
    borels = enumerate_brp(n, "BRP00")
    odd = {x: frozenset(borel_odd_roots(x, n)) for x in borels}
    sign_ok = Check("Borel odd roots from shape equal the sign test", n)
    for x in borels:
        test = decompose(zeta(x, n), n).odd_part()
        if test != odd[x]:
            sign_ok.counterexamples.append(str(x))
    r.checks.append(sign_ok)
    c = Check("Borel inclusion criterion equals root-set inclusion", n, detail=f"{len(borels) ** 2} pairs")
    for x, y in product(borels, borels):
        if borel_included(x, y) != (odd[x] < odd[y]):
            c.counterexamples.append(f"{x} ⊂ {y}")
    r.checks.append(c)

    forms = [to_sign_form(x) for x in enumerate_brp(n, "BRP0")]
    roots = {s: reduced_parabolic(s).parabolic for s in forms}
    c = Check("parabolic order equals root-set inclusion", n, detail=f"{len(forms) ** 2} pairs")
    for s, t in product(forms, forms):
        if parabolic_included(s, t) != (roots[s] <= roots[t]):
            c.counterexamples.append(f"{s.kappa}{s.f} ≤ {t.kappa}{t.f}")
    r.checks.append(c)
    return r


def verify_levi_facts(n: int, bound: int | None = None) -> Report:
    """Membership of single root spaces in l and p, read off coordinates of δ."""
    if n > 3:
        raise ValueError("Levi sweep is limited to n ≤ 3")
    bound = n + 1 if bound is None else bound
    names = [
        "ε_i−ε_j ∈ l iff δ_i = δ_j",
        "±(ε_i+ε_j) ∈ l iff δ_i = −δ_j",
        "2ε_k ∈ l iff δ_k = 0",
        "ε_i+ε_j ∈ p iff δ_i ≥ −δ_j",
        "2ε_k ∈ p iff δ_k ≥ 0",
    ]
    checks = [Check(nm, n, detail=f"bound {bound}, all integer δ") for nm in names]

    def e(*idx, sign=1):
        c = [0] * n
        for i in idx:
            c[i] += sign
        return Root(Weight(tuple(c)), 1)

    for delta in grid(GridSpec(n, bound, decreasing=False)):
        dec = decompose(delta, n)
        levi, par = set(dec.levi), dec.parabolic
        d = delta.eps
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                a = Root(Weight(tuple((1 if k == i else -1 if k == j else 0) for k in range(n))), 0)
                if (a in levi) != (d[i] == d[j]):
                    checks[0].counterexamples.append(f"δ={delta}, {a}")
                if i < j:
                    plus, minus = e(i, j), e(i, j, sign=-1)
                    if (plus in levi) != (d[i] == -d[j]) or (minus in levi) != (d[i] == -d[j]):
                        checks[1].counterexamples.append(f"δ={delta}, i={i + 1}, j={j + 1}")
                    if (plus in par) != (d[i] >= -d[j]):
                        checks[3].counterexamples.append(f"δ={delta}, {plus}")
            two = e(i, i)
            if (two in levi) != (d[i] == 0):
                checks[2].counterexamples.append(f"δ={delta}, {two}")
            if (two in par) != (d[i] >= 0):
                checks[4].counterexamples.append(f"δ={delta}, {two}")
    return Report(checks)


@lru_cache(maxsize=None)
def _rho0(n: int) -> Weight:
    return rho_signed([r for r in pe(n).even_roots if next(c for c in r.weight.eps if c) > 0], zero=Weight.zero(n))


def verify_ringel_suite(n: int, samples: int = 100, seed: int = 0, spread: int = 6) -> Report:
    if n > 5:
        raise ValueError("Ringel suite is limited to n ≤ 5")
    rng = random.Random(f"{seed}:{n}")
    lams = [Weight(tuple(rng.randint(-spread, spread) for _ in range(n))) for _ in range(samples)]
    forms = [to_sign_form(x) for x in enumerate_brp(n, "BRP0")]
    bs = to_sign_form(standard_label(n))
    w0 = longest_element(n)
    wn = omega(n, n)

    inv = Check("Ringel map is an involution", n, detail=f"{samples} weights × {len(forms)} parabolics")
    for s in forms:
        for lam in lams:
            if ringel_weight_map(s, ringel_weight_map(s, lam)) != lam:
                inv.counterexamples.append(f"{s.kappa}{s.f}, λ={lam}")

    closed = Check("Ringel map at the standard Borel has the closed form", n)
    tri = Check("duality after Ringel at the standard Borel", n)
    br = borel_roots(reverse_label(n), n)
    for lam in lams:
        expect = -lam - 2 * _rho0(n) - (1 - n) * wn
        if ringel_weight_map(bs, lam) != expect:
            closed.counterexamples.append(f"λ={lam}")
        via = duality_weight_map(ringel_weight_map(bs, lam), n)
        form1 = weyl_apply(w0, lam) - 2 * _rho0(n) + (1 - n) * wn
        form2 = weyl_apply(w0, lam) - 2 * rho_signed(br, zero=Weight.zero(n))
        if not via == form1 == form2:
            tri.counterexamples.append(f"λ={lam}")

    hat = Check("hat dual swaps u⁺ and u⁻ through w₀", n)
    for x in enumerate_brp(n, "BRP0"):
        try:
            hat_dual(x)
        except AssertionError as e:
            hat.counterexamples.append(str(e))

    tilt = Check("tilting label equals duality of the Ringel label", n, detail="every Borel")
    for x in enumerate_brp(n, "BRP00"):
        s = to_sign_form(x)
        for lam in lams[:20]:
            got = pi_predicates(x, lam, n).tilting_label
            want = (hat_dual(x), duality_weight_map(ringel_weight_map(s, lam), n))
            if got != want:
                tilt.counterexamples.append(f"{x}, λ={lam}")

    blocks = Check("w₀ of the Levi fixes 2ρ(u⁻)", n)
    for s in forms:
        dec = reduced_parabolic(s)
        shift = 2 * rho_signed(dec.uminus, zero=Weight.zero(n))
        w = longest_element(levi_blocks(zeta(from_sign_form(s), n)))
        if weyl_apply(w, shift) != shift:
            blocks.counterexamples.append(f"{s.kappa}{s.f}")
    return Report([inv, closed, tri, hat, tilt, blocks])


def verify_flags(n: int, depth: int = 6, samples: int = 2, seed: int = 0) -> Report:
    rng = random.Random(f"flag:{seed}:{n}")
    lams = [Weight.zero(n)] + [Weight(tuple(rng.randint(-3, 3) for _ in range(n))) for _ in range(samples)]
    c = Check("flag identity for induced even Vermas", n, detail=f"depth {depth}, {len(lams)} weights")
    for b in enumerate_brp(n, "BRP00"):
        for lam in lams:
            res = verify_flag_identity(b, lam, depth, n)
            if not res:
                c.counterexamples.append(f"{b}, λ={lam}: {len(res.diff)} differing terms")
    return Report([c])


def run_suite(n: int, suite: str = "all", bound: int | None = None) -> Report:
    # name -> (runner, largest rank it accepts)
    parts = {
        "classification": (lambda: verify_classification(n, bound), 4),
        "orders": (lambda: verify_orders(n), 4),
        "levi": (lambda: verify_levi_facts(n, bound), 3),
        "ringel": (lambda: verify_ringel_suite(n), 5),
        "flag": (lambda: verify_flags(n), 3),
    }
    if suite != "all" and suite not in parts:
        raise ValueError(f"unknown suite {suite!r}")
    r = Report()
    for name, (fn, limit) in parts.items():
        if suite not in ("all", name):
            continue
        if n > limit:
            r.checks.append(Check(name, n, detail=f"rank limit {limit}", skipped=True))
        else:
            r = r + fn()
    return r
