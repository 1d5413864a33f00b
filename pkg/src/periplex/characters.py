"""Truncated formal characters of Verma-type modules for pe(n).

Every term carries a weight, a parity and a grade. The grade counts the
root factors used to reach the term from ``base``. A character of depth D
keeps exactly the terms of grade ≤ D. Grades add under multiplication, so
sums and products of truncated characters are exact at the smaller depth.

>>> from periplex.periplectic import reverse_label
>>> ch = verma_character(reverse_label(1), ParityWeight(Weight.of(0)), 3, 1)
>>> sorted((str(w.weight), w.parity, c) for w, c in ch.terms.items())
[('(0)', 0, 1), ('(2)', 1, 1)]
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .partitions import Bipartition
from .periplectic import _require, borel_odd_roots, decompose, pe, zeta
from .weights import ParityWeight, Root, Weight

__all__ = [
    "FormalCharacter",
    "FlagCheck",
    "monomial",
    "char_add",
    "char_mult",
    "parity_shift",
    "verma_character",
    "even_verma_character",
    "induced_character",
    "delta_flag_labels",
    "verify_flag_identity",
]

Key = tuple  # (Weight, parity, grade)


@dataclass(frozen=True)
class FormalCharacter:
    base: ParityWeight
    depth: int
    positive_system: Bipartition
    graded: Mapping[Key, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.depth < 0:
            raise ValueError("depth must be nonnegative")
        clean = {k: c for k, c in self.graded.items() if c and k[2] <= self.depth}
        object.__setattr__(self, "graded", dict(sorted(clean.items(), key=_order)))

    @property
    def n(self) -> int:
        return len(self.base.weight.eps)

    @property
    def terms(self) -> dict[ParityWeight, int]:
        out: dict[ParityWeight, int] = defaultdict(int)
        for (w, p, _), c in self.graded.items():
            out[ParityWeight(w, p)] += c
        return {k: c for k, c in out.items() if c}

    def coefficient(self, weight: Weight, parity: int = 0) -> int:
        return self.terms.get(ParityWeight(weight, parity), 0)

    def restrict(self, depth: int) -> "FormalCharacter":
        if depth > self.depth:
            raise ValueError(f"cannot restrict depth {self.depth} to larger depth {depth}")
        return FormalCharacter(self.base, depth, self.positive_system, self.graded)

    def regrade(self, base: ParityWeight, offset: int) -> "FormalCharacter":
        """Same terms seen from a lower reference ``base``, ``offset`` factors below."""
        g = {(w, p, k + offset): c for (w, p, k), c in self.graded.items()}
        return FormalCharacter(base, self.depth + offset, self.positive_system, g)

    def __eq__(self, other):
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return (self.base, self.depth, self.positive_system) == (
            other.base, other.depth, other.positive_system
        ) and self.graded == other.graded

    def __hash__(self):
        return hash((self.base, self.depth, self.positive_system, tuple(self.graded.items())))

    def to_json(self) -> dict:
        lowest: dict[ParityWeight, int] = {}
        for (w, p, k) in self.graded:
            key = ParityWeight(w, p)
            lowest[key] = min(lowest.get(key, k), k)
        items = sorted(self.terms.items(), key=lambda kv: (lowest[kv[0]], kv[0].weight.coords, kv[0].parity))
        return {
            "base": {"weight": [str(c) for c in self.base.weight.eps], "parity": self.base.parity},
            "depth": self.depth,
            "terms": [
                {"weight": [str(c) for c in k.weight.eps], "parity": k.parity, "coeff": c}
                for k, c in items
            ],
        }


def _order(item):
    (w, p, k), _ = item
    return (k, w.coords, p)


@dataclass(frozen=True)
class FlagCheck:
    ok: bool
    diff: dict

    def __bool__(self):
        return self.ok


def monomial(borel: Bipartition, weight: Weight, parity: int = 0, depth: int = 0, grade: int = 0,
             base: ParityWeight | None = None) -> FormalCharacter:
    base = base or ParityWeight(weight, parity)
    return FormalCharacter(base, depth, borel, {(weight, parity, grade): 1})


def _same_system(a: FormalCharacter, b: FormalCharacter):
    if a.positive_system != b.positive_system:
        raise ValueError(f"positive systems differ: {a.positive_system} vs {b.positive_system}")


def char_add(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    _same_system(a, b)
    if a.base != b.base:
        raise ValueError("characters with different bases; regrade one first")
    depth = min(a.depth, b.depth)
    g: dict[Key, int] = defaultdict(int)
    for src in (a.graded, b.graded):
        for k, c in src.items():
            if k[2] <= depth:
                g[k] += c
    return FormalCharacter(a.base, depth, a.positive_system, g)


def char_mult(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    _same_system(a, b)
    depth = min(a.depth, b.depth)
    g: dict[Key, int] = defaultdict(int)
    for (w1, p1, k1), c1 in a.graded.items():
        for (w2, p2, k2), c2 in b.graded.items():
            if k1 + k2 <= depth:
                g[(w1 + w2, (p1 + p2) % 2, k1 + k2)] += c1 * c2
    return FormalCharacter(a.base + b.base, depth, a.positive_system, g)


def parity_shift(a: FormalCharacter) -> FormalCharacter:
    g = {(w, 1 - p, k): c for (w, p, k), c in a.graded.items()}
    base = ParityWeight(a.base.weight, 1 - a.base.parity)
    return FormalCharacter(base, a.depth, a.positive_system, g)


def _times_odd(g: dict[Key, int], gamma: Weight, depth: int) -> dict[Key, int]:
    """Multiply by 1 + e^(γ,1)."""
    out: dict[Key, int] = defaultdict(int, g)
    for (w, p, k), c in g.items():
        if k < depth:
            out[(w + gamma, 1 - p, k + 1)] += c
    return out


def _times_geometric(g: dict[Key, int], beta: Weight, depth: int) -> dict[Key, int]:
    """Multiply by (1 − e^(β,0))⁻¹ = Σ_j e^(jβ,0)."""
    out: dict[Key, int] = defaultdict(int)
    for (w, p, k), c in g.items():
        for j in range(depth - k + 1):
            out[(w + j * beta, p, k + j)] += c
    return out


def _lowering(b: Bipartition, n: int) -> tuple[list[Weight], list[Weight]]:
    dec = decompose(zeta(b, n), n)
    even = [r.weight for r in dec.uminus if r.parity == 0]
    odd = [r.weight for r in dec.uminus if r.parity == 1]
    return even, odd


def verma_character(b: Bipartition, lam: ParityWeight, depth: int, n: int) -> FormalCharacter:
    """e^λ · Π_even (1 − e^β)⁻¹ · Π_odd (1 + e^γ) over the roots of n⁻ for the Borel b."""
    _require(b, n, "BRP00")
    even, odd = _lowering(b, n)
    g: dict[Key, int] = {(lam.weight, lam.parity, 0): 1}
    for gamma in odd:
        g = _times_odd(g, gamma, depth)
    for beta in even:
        g = _times_geometric(g, beta, depth)
    return FormalCharacter(lam, depth, b, g)


def even_verma_character(lam: ParityWeight, depth: int, n: int, borel: Bipartition) -> FormalCharacter:
    """Verma character for the even part, tagged with ``borel`` for bookkeeping."""
    g: dict[Key, int] = {(lam.weight, lam.parity, 0): 1}
    for r in pe(n).even_roots:
        if r not in _standard_even_positive(n):
            g = _times_geometric(g, r.weight, depth)
    return FormalCharacter(lam, depth, borel, g)


def _standard_even_positive(n: int) -> frozenset[Root]:
    return frozenset(r for r in pe(n).even_roots if next(c for c in r.weight.eps if c) > 0)


def induced_character(m: FormalCharacter, n: int) -> FormalCharacter:
    """Multiply by Π (1 + e^(α,1)) over every odd root of pe(n)."""
    g = dict(m.graded)
    for r in pe(n).odd_roots:
        g = _times_odd(g, r.weight, m.depth)
    return FormalCharacter(m.base, m.depth, m.positive_system, g)


def _subsets(roots: Iterable[Root]):
    roots = list(roots)
    for k in range(len(roots) + 1):
        yield from combinations(roots, k)


def delta_flag_labels(b: Bipartition, lam: Weight, n: int, parity: int = 0) -> list[ParityWeight]:
    """{(λ + Σ_S α, |S| mod 2) : S ⊆ odd roots of b}, as a sorted multiset."""
    _require(b, n, "BRP00")
    out = []
    for S in _subsets(borel_odd_roots(b, n)):
        w = lam
        for r in S:
            w = w + r.weight
        out.append(ParityWeight(w, (parity + len(S)) % 2))
    return sorted(out, key=lambda pw: (pw.weight.coords, pw.parity))


def verify_flag_identity(b: Bipartition, lam: Weight, depth: int, n: int, parity: int = 0) -> FlagCheck:
    """Induced even Verma versus the sum of b-Vermas over the flag labels, to ``depth``."""
    base = ParityWeight(lam, parity)
    lhs = induced_character(even_verma_character(base, depth, n, b), n)
    g: dict[Key, int] = defaultdict(int)
    for S in _subsets(borel_odd_roots(b, n)):
        if len(S) > depth:
            continue
        top = lam
        for r in S:
            top = top + r.weight
        v = verma_character(b, ParityWeight(top, (parity + len(S)) % 2), depth - len(S), n)
        for k, c in v.regrade(base, len(S)).graded.items():
            g[k] += c
    rhs = FormalCharacter(base, depth, b, g)
    keys = set(lhs.graded) | set(rhs.graded)
    diff = {k: (lhs.graded.get(k, 0), rhs.graded.get(k, 0)) for k in keys if lhs.graded.get(k, 0) != rhs.graded.get(k, 0)}
    return FlagCheck(not diff, diff)
