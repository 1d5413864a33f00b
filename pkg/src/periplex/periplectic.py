"""Parabolic and Borel subalgebras of pe(n) and the weight maps between their categories O.

A rational weight δ splits the roots of pe(n) three ways by the sign of
(δ, α). Bipartitions label the splits:

    x = (μ, ν)  ↦  ζ_x = Σ μ_i ε_i − Σ ν_j ε_{n+1−j}

>>> from periplex.partitions import Bipartition
>>> canonicalize(Weight.of(5, -5), 2)
Bipartition(mu=(1,), nu=(1,))
>>> borel_odd_dim(Bipartition((2, 1), ()), 2)
3
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .partitions import (
    Bipartition,
    SignForm,
    brp_leq,
    classify_bipartition,
    dual,
    from_sign_form,
    staircase,
)
from .weights import (
    Root,
    RootDatum,
    Weight,
    as_fraction,
    build_root_datum,
    is_antidominant,
    longest_element,
    odd_sum,
    omega,
    rho_signed,
    weyl_apply,
)

__all__ = [
    "NotApplicable",
    "ParabolicDecomposition",
    "LeviType",
    "PIPredicates",
    "pe",
    "zeta",
    "sign_pattern",
    "decompose",
    "is_closed",
    "canonicalize",
    "standard_label",
    "reverse_label",
    "borel_odd_roots",
    "borel_odd_dim",
    "borel_roots",
    "borel_included",
    "reduced_parabolic",
    "parabolic_included",
    "hat_dual",
    "levi_type",
    "levi_blocks",
    "ringel_weight_map",
    "duality_weight_map",
    "tilting_odd_reflection",
    "pi_predicates",
    "selfdual_projective",
    "verma_socle_label",
    "ringel_multiplicity_pair",
    "hasse_edges",
    "to_dot",
]


class NotApplicable(ValueError):
    pass


def pe(n: int) -> RootDatum:
    return build_root_datum("pe", n)


def _weight(lam: Weight | Sequence, n: int) -> Weight:
    w = lam if isinstance(lam, Weight) else Weight(tuple(as_fraction(c) for c in lam))
    if w.shape != (0, n):
        raise ValueError(f"expected a pe({n}) weight with {n} coordinates, got shape {w.shape}")
    return w


def _require(x: Bipartition, n: int, kind: str) -> None:
    c = classify_bipartition(x, n)
    ok = {"BRP": c.brp, "BRP0": c.brp0, "BRP00": c.brp00}[kind]
    if not ok:
        raise ValueError(f"{x} is not in {kind}_{n}")


def zeta(x: Bipartition, n: int) -> Weight:
    if len(x.mu) + len(x.nu) > n:
        raise ValueError(f"{x} has more than {n} parts")
    c = [0] * n
    for i, m in enumerate(x.mu):
        c[i] = m
    for j, v in enumerate(x.nu):
        c[n - 1 - j] = -v
    return Weight(tuple(c))


@dataclass(frozen=True)
class ParabolicDecomposition:
    n: int
    uminus: tuple[Root, ...]
    levi: tuple[Root, ...]
    uplus: tuple[Root, ...]

    @property
    def parabolic(self) -> frozenset[Root]:
        return frozenset(self.levi) | frozenset(self.uplus)

    @property
    def is_reduced(self) -> bool:
        return all(r.parity == 0 for r in self.levi)

    @property
    def is_borel(self) -> bool:
        return not self.levi

    def odd_part(self) -> frozenset[Root]:
        return frozenset(r for r in self.parabolic if r.parity == 1)

    def to_json(self) -> dict:
        enc = lambda rs: [{"weight": [str(c) for c in r.weight.coords], "parity": r.parity} for r in rs]
        return {"uminus": enc(self.uminus), "levi": enc(self.levi), "uplus": enc(self.uplus)}


def sign_pattern(delta: Weight, n: int) -> tuple[int, ...]:
    d = _weight(delta, n).eps
    out = []
    for r in pe(n).roots:
        # pe roots have integer coordinates and the form is the dot product
        v = sum(c * x for c, x in zip(r.weight.eps, d) if c)
        out.append((v > 0) - (v < 0))
    return tuple(out)


def decompose(delta: Weight | Sequence, n: int) -> ParabolicDecomposition:
    d = _weight(delta, n)
    g = pe(n)
    parts: dict[int, list[Root]] = {-1: [], 0: [], 1: []}
    for r, s in zip(g.roots, sign_pattern(d, n)):
        parts[s].append(r)
    return ParabolicDecomposition(n, tuple(parts[-1]), tuple(parts[0]), tuple(parts[1]))


def is_closed(dec: ParabolicDecomposition) -> bool:
    """Closure of levi∪uplus, levi∪uminus and levi under root addition."""
    roots = {r.weight for r in pe(dec.n).roots}

    def closed(rs: Iterable[Root]) -> bool:
        ws = {r.weight for r in rs}
        return all(a + b in ws for a in ws for b in ws if a + b in roots)

    return closed(dec.parabolic) and closed(dec.levi + dec.uminus) and closed(dec.levi)


def _scale_and_round(vals: list[Fraction]) -> list[int]:
    gaps = [abs(a - b) for i, a in enumerate(vals) for b in vals[i + 1:]]
    gaps += [abs(a + b) for i, a in enumerate(vals) for b in vals[i:]]
    gaps = [g for g in gaps if g]
    if gaps and min(gaps) < 2:
        c = 2 / min(gaps)
        vals = [c * v for v in vals]
    return [math.ceil(v) if v > 0 else math.floor(v) if v < 0 else 0 for v in vals]


def _manipulate(mu: list[int], v: list[int]) -> bool:
    """Apply one of the three shrinking moves; return False at a fixed point.

    ``mu`` holds the nonnegative entries, ``v`` the negative ones. A value a
    can drop to a−1 when a−1 is taken by no other entry, using the boundary
    values μ = 0 below the last μ-block and |v₀| = 0 above the first v-block.
    """
    absv = [-x for x in v]
    for a in sorted({p for p in mu if p > 0} | set(absv)):
        mu_gap = a > max((p for p in mu if p < a), default=0) + 1
        v_gap = a > max((b for b in absv if b < a), default=0) + 1
        if not (mu_gap and v_gap):
            continue
        # move (1): μ-block alone, (2): v-block alone, (3): both together
        if a in mu:
            mu[:] = [p - 1 if p == a else p for p in mu]
        if a in absv:
            v[:] = [x + 1 if x == -a else x for x in v]
        return True
    return False


def canonicalize(delta: Weight | Sequence, n: int) -> Bipartition:
    """The unique x ∈ BRP_n whose ζ_x splits the roots exactly as δ does."""
    d = _weight(delta, n)
    vals = list(d.eps)
    if any(vals[i] < vals[i + 1] for i in range(n - 1)):
        raise ValueError(f"δ = {d} is not weakly decreasing")
    ints = _scale_and_round(vals)
    mu = [x for x in ints if x >= 0]
    v = [x for x in ints if x < 0]
    while _manipulate(mu, v):
        pass
    x = Bipartition(tuple(p for p in mu if p > 0), tuple(-u for u in reversed(v)))
    if not classify_bipartition(x, n).brp or sign_pattern(zeta(x, n), n) != sign_pattern(d, n):
        raise AssertionError(f"canonicalize({d}) produced {x}, which splits the roots differently")
    return x


def standard_label(n: int) -> Bipartition:
    return Bipartition(staircase(n), ())


def reverse_label(n: int) -> Bipartition:
    return Bipartition((), staircase(n))


def _e(n: int, *idx: int, sign: int = 1) -> Weight:
    c = [0] * n
    for i in idx:
        c[i - 1] += sign
    return Weight(tuple(c))


@lru_cache(maxsize=None)
def borel_odd_roots(x: Bipartition, n: int) -> tuple[Root, ...]:
    """Odd roots of b(ζ_x), read off from the shape of x."""
    _require(x, n, "BRP00")
    out = set()
    for i, m in enumerate(x.mu, start=1):
        for j in range(i, m + i):
            out.add(Root(_e(n, i, j), 1))
    for k, v in enumerate(x.nu, start=1):
        for l in range(k + 1, v + k):
            out.add(Root(_e(n, n + 1 - l, n + 1 - k, sign=-1), 1))
    return tuple(sorted(out))


def borel_odd_dim(x: Bipartition, n: int) -> int:
    _require(x, n, "BRP00")
    return n * (n - 1) // 2 + len(x.mu)


@lru_cache(maxsize=None)
def borel_roots(x: Bipartition, n: int) -> tuple[Root, ...]:
    """Φ(b): the even ε_i−ε_j (i<j) together with the odd roots of b."""
    even = [Root(_e(n, i) - _e(n, j), 0) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return tuple(sorted(even + list(borel_odd_roots(x, n))))


def borel_included(x: Bipartition, y: Bipartition) -> bool:
    """Strict inclusion b(ζ_x) ⊊ b(ζ_y)."""
    n = len(x.merged)
    _require(x, n, "BRP00")
    _require(y, n, "BRP00")
    return y.mu == x.mu + (1,) and x.nu == y.nu + (1,)


@lru_cache(maxsize=None)
def reduced_parabolic(s: SignForm, n: int | None = None) -> ParabolicDecomposition:
    n = s.r if n is None else n
    if s.r != n:
        raise ValueError(f"sign form of length {s.r} used at rank {n}")
    x = from_sign_form(s)
    _require(x, n, "BRP0")
    dec = decompose(zeta(x, n), n)
    b = from_sign_form(SignForm(staircase(n), s.f))
    if dec.odd_part() != frozenset(borel_odd_roots(b, n)):
        raise AssertionError(f"odd part of p{s} differs from the Borel labelled by f")
    return dec


def parabolic_included(s: SignForm, t: SignForm) -> bool:
    for u in (s, t):
        _require(from_sign_form(u), u.r, "BRP0")
    return brp_leq(s, t)


@lru_cache(maxsize=None)
def hat_dual(x: Bipartition) -> Bipartition:
    n = len(x.merged)
    _require(x, n, "BRP0")
    y = dual(x)
    w0 = longest_element(n)
    a, b = decompose(zeta(x, n), n), decompose(zeta(y, n), n)
    flip = lambda rs: frozenset(Root(weyl_apply(w0, r.weight), r.parity) for r in rs)
    if frozenset(b.uplus) != flip(a.uminus) or frozenset(b.uminus) != flip(a.uplus):
        raise AssertionError(f"hat dual of {x} does not swap u⁺ and u⁻ through w₀")
    return y


@dataclass(frozen=True)
class LeviType:
    k0: int
    blocks: tuple[tuple[int, int], ...]

    def __str__(self):
        parts = [f"pe({self.k0})"] if self.k0 else []
        parts += [f"gl({k}|{l})" for k, l in self.blocks if k or l]
        return " ⊕ ".join(parts) or "h"


def levi_type(x: Bipartition, n: int) -> LeviType:
    _require(x, n, "BRP")
    top = max(x.merged, default=0)
    blocks = tuple((x.mu.count(i), x.nu.count(i)) for i in range(1, top + 1))
    return LeviType(n - len(x.mu) - len(x.nu), blocks)


def levi_blocks(delta: Weight) -> list[int]:
    """Sizes of the maximal runs of equal coordinates."""
    sizes: list[int] = []
    prev = None
    for c in delta.eps:
        if sizes and c == prev:
            sizes[-1] += 1
        else:
            sizes.append(1)
        prev = c
    return sizes


@lru_cache(maxsize=None)
def _ringel_parts(s: SignForm):
    n = s.r
    dec = reduced_parabolic(s)
    w0p = longest_element(levi_blocks(zeta(from_sign_form(s), n)))
    shift = 2 * rho_signed(dec.uminus, zero=Weight.zero(n))
    return w0p, shift


def ringel_weight_map(s: SignForm, lam: Weight | Sequence) -> Weight:
    """λ ↦ −w₀^p λ + 2ρ(u⁻)."""
    w0p, shift = _ringel_parts(s)
    return -weyl_apply(w0p, _weight(lam, s.r)) + shift


def duality_weight_map(lam: Weight | Sequence, n: int) -> Weight:
    """λ ↦ −w₀λ."""
    return -weyl_apply(longest_element(n), _weight(lam, n))


def tilting_odd_reflection(lam: Weight | Sequence, alpha: Root) -> Weight:
    """Tilting label after crossing the odd simple root α = 2ε_i or ε_i+ε_{i+1}."""
    a = alpha.weight
    n = len(a.eps)
    lam = _weight(lam, n)
    nz = [(i, c) for i, c in enumerate(a.eps) if c]
    if alpha.parity == 1 and len(nz) == 1 and nz[0][1] == 2:
        return lam + a
    if alpha.parity == 1 and len(nz) == 2 and nz[1][0] == nz[0][0] + 1 and nz[0][1] == nz[1][1] == 1:
        i = nz[0][0]
        return lam + a if lam.eps[i] != lam.eps[i + 1] else lam + 2 * a
    raise ValueError(f"{alpha} is neither 2ε_i nor ε_i+ε_(i+1)")


@lru_cache(maxsize=None)
def _two_rho(x: Bipartition, n: int) -> Weight:
    return 2 * rho_signed(borel_roots(x, n), zero=Weight.zero(n))


@lru_cache(maxsize=None)
def _negative_odd(x: Bipartition, n: int) -> tuple[Root, ...]:
    return tuple(r for r in borel_odd_roots(x, n) if all(c <= 0 for c in r.weight.eps))


@dataclass(frozen=True)
class PIPredicates:
    injective: bool
    injective_label: Weight
    tilting_label: tuple[Bipartition, Weight]
    selfdual: bool | None


def _selfdual(lam: Weight, n: int) -> bool:
    return is_antidominant(pe(n), lam) and lam + weyl_apply(longest_element(n), lam) == (n - 3) * omega(n, n)


def pi_predicates(x: Bipartition, lam: Weight | Sequence, n: int) -> PIPredicates:
    """Projective-injective data for P^b(λ).

    ``selfdual`` is only decided for the standard Borel and is None elsewhere.
    """
    _require(x, n, "BRP00")
    lam = _weight(lam, n)
    shift = odd_sum(_negative_odd(x, n), zero=Weight.zero(n))
    injective = is_antidominant(pe(n), lam - shift)
    xh = dual(x)
    tilt = weyl_apply(longest_element(n), lam) - _two_rho(xh, n)
    sd = _selfdual(lam, n) if x == standard_label(n) else None
    return PIPredicates(injective, lam + 2 * omega(n, n), (xh, tilt), sd)


def selfdual_projective(x: Bipartition, lam: Weight | Sequence, n: int) -> bool:
    if x != standard_label(n):
        raise NotApplicable("self-duality of projectives is only decided for the standard Borel")
    return _selfdual(_weight(lam, n), n)


def verma_socle_label(x: Bipartition, mu: Weight | Sequence, n: int) -> Weight:
    """μ shifted by the sum of the odd roots of b lying in g⁻."""
    _require(x, n, "BRP00")
    return _weight(mu, n) + odd_sum(_negative_odd(x, n), zero=Weight.zero(n))


def ringel_multiplicity_pair(s: SignForm, lam: Weight | Sequence, mu: Weight | Sequence) -> tuple[Weight, Weight]:
    return ringel_weight_map(s, mu), ringel_weight_map(s, lam)


def hasse_edges(items: Sequence, less: Callable[[object, object], bool]) -> list[tuple[int, int]]:
    """Cover relations (i, j), meaning items[i] < items[j] with nothing strictly between."""
    k = len(items)
    lt = [[i != j and less(items[i], items[j]) for j in range(k)] for i in range(k)]
    return [
        (i, j)
        for i in range(k)
        for j in range(k)
        if lt[i][j] and not any(lt[i][m] and lt[m][j] for m in range(k))
    ]


def to_dot(labels: Sequence[str], edges: Iterable[tuple[int, int]], name: str = "inclusion") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, lab in enumerate(labels):
        lines.append(f'  n{i} [label="{lab}"];')
    for i, j in edges:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
