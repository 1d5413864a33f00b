"""Exact weights, roots and Weyl actions for the superalgebra families in scope.

A weight has two coordinate blocks. ``delta`` holds the coordinates on
δ_1, ..., δ_k and ``eps`` the coordinates on ε_1, ..., ε_n. Single-block
families (pe, q) leave ``delta`` empty.

>>> pe2 = build_root_datum("pe", 2)
>>> len(pe2.roots), len(pe2.odd_roots)
(6, 4)
>>> pair(pe2, Weight.of(1, 0), Weight.of(1, 0))
Fraction(1, 1)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

__all__ = [
    "Family",
    "Weight",
    "ParityWeight",
    "Root",
    "RootDatum",
    "WeylElement",
    "NonIntegralWeight",
    "FormUndefined",
    "as_fraction",
    "build_root_datum",
    "pair",
    "coroot_pairing",
    "rho_signed",
    "odd_sum",
    "weyl_apply",
    "longest_element",
    "is_integral",
    "is_antidominant",
    "odd_reflection",
    "omega",
]

Number = Union[int, Fraction, str]


def as_fraction(x: Number) -> Fraction:
    """Coerce to ``Fraction``, refusing floats so nothing inexact sneaks in."""
    if type(x) is Fraction:
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(x, float):
        raise TypeError(f"float {x!r} rejected; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


class NonIntegralWeight(ValueError):
    pass


class FormUndefined(ValueError):
    pass


class Family(str, enum.Enum):
    PE = "pe"
    GL = "gl"
    Q = "q"
    SPO_EVEN = "spo-even"
    SPO_ODD = "spo-odd"
    D21 = "d21"
    G3 = "g3"
    F31 = "f31"


@dataclass(frozen=True)
class Weight:
    eps: tuple[Fraction, ...]
    delta: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "eps", tuple(as_fraction(c) for c in self.eps))
        object.__setattr__(self, "delta", tuple(as_fraction(c) for c in self.delta))

    @classmethod
    def of(cls, *eps: Number) -> "Weight":
        return cls(tuple(eps))

    @classmethod
    def zero(cls, n_eps: int, n_delta: int = 0) -> "Weight":
        return cls((0,) * n_eps, (0,) * n_delta)

    @classmethod
    def from_coords(cls, coords: Sequence[Number], n_delta: int = 0) -> "Weight":
        coords = tuple(coords)
        return cls(coords[n_delta:], coords[:n_delta])

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return self.delta + self.eps

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.delta), len(self.eps))

    def _check(self, other: "Weight"):
        if self.shape != other.shape:
            raise ValueError(f"weight shapes differ: {self.shape} vs {other.shape}")

    @classmethod
    def _raw(cls, eps: tuple, delta: tuple) -> "Weight":
        # entries are already Fractions; skip coercion on the arithmetic fast path
        w = object.__new__(cls)
        object.__setattr__(w, "eps", eps)
        object.__setattr__(w, "delta", delta)
        return w

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight._raw(
            tuple(a + b for a, b in zip(self.eps, other.eps)),
            tuple(a + b for a, b in zip(self.delta, other.delta)),
        )

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight._raw(
            tuple(a - b for a, b in zip(self.eps, other.eps)),
            tuple(a - b for a, b in zip(self.delta, other.delta)),
        )

    def __neg__(self) -> "Weight":
        return Weight._raw(tuple(-a for a in self.eps), tuple(-a for a in self.delta))

    def __mul__(self, c: Number) -> "Weight":
        c = as_fraction(c)
        return Weight._raw(tuple(c * a for a in self.eps), tuple(c * a for a in self.delta))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self):
        body = ", ".join(repr(str(c)) if c.denominator != 1 else str(c) for c in self.eps)
        if self.delta:
            dl = ", ".join(repr(str(c)) if c.denominator != 1 else str(c) for c in self.delta)
            return f"Weight(({body},), delta=({dl},))"
        return f"Weight.of({body})"

    def __str__(self):
        body = ",".join(str(c) for c in self.eps)
        if self.delta:
            return "(" + ",".join(str(c) for c in self.delta) + ";" + body + ")"
        return "(" + body + ")"


@dataclass(frozen=True)
class ParityWeight:
    weight: Weight
    parity: int = 0

    def __post_init__(self):
        if self.parity not in (0, 1):
            raise ValueError(f"parity must be 0 or 1, got {self.parity!r}")

    def __add__(self, other: "ParityWeight") -> "ParityWeight":
        return ParityWeight(self.weight + other.weight, (self.parity + other.parity) % 2)


@dataclass(frozen=True, order=True)
class Root:
    weight: Weight = field(compare=False)
    parity: int = 0
    _key: tuple = field(init=False, repr=False, compare=True)

    def __post_init__(self):
        if self.parity not in (0, 1):
            raise ValueError(f"parity must be 0 or 1, got {self.parity!r}")
        object.__setattr__(self, "_key", self.weight.coords)

    @property
    def is_odd(self) -> bool:
        return self.parity == 1

    def __str__(self):
        return f"{self.weight}{'*' if self.parity else ''}"


# form signs per block: (delta, eps); None means the form is not modelled
_FORMS = {
    Family.PE: (1, 1),
    Family.Q: (1, 1),
    Family.GL: (1, -1),
    Family.SPO_EVEN: (1, -1),
    Family.SPO_ODD: (1, -1),
    Family.D21: None,
    Family.G3: None,
    Family.F31: None,
}


@dataclass(frozen=True)
class RootDatum:
    family: Family
    ranks: tuple[int, ...]
    n_delta: int
    n_eps: int
    roots: tuple[Root, ...]
    even_simple: tuple[Root, ...]
    positive: tuple[Root, ...]
    zeta: Fraction | None = None

    @property
    def form_rule(self):
        return _FORMS[self.family]

    @property
    def even_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if r.parity == 0)

    @property
    def odd_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if r.parity == 1)

    def zero(self) -> Weight:
        return Weight.zero(self.n_eps, self.n_delta)

    def weight(self, eps: Sequence[Number] = (), delta: Sequence[Number] = ()) -> Weight:
        w = Weight(tuple(eps), tuple(delta))
        if w.shape != (self.n_delta, self.n_eps):
            raise ValueError(
                f"{self.family.value}{self.ranks}: expected shape "
                f"{(self.n_delta, self.n_eps)}, got {w.shape}"
            )
        return w


def _vec(nd: int, ne: int, d: dict[int, int] = {}, e: dict[int, int] = {}) -> Weight:
    return Weight(tuple(e.get(i, 0) for i in range(ne)), tuple(d.get(i, 0) for i in range(nd)))


def _positive_by(roots: Iterable[Root], h: Sequence[Fraction]) -> tuple[Root, ...]:
    out = []
    for r in roots:
        v = sum(a * b for a, b in zip(h, r.weight.coords))
        if v == 0:
            raise AssertionError(f"functional not regular on {r}")
        if v > 0:
            out.append(r)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _build(family: Family, ranks: tuple[int, ...], zeta: Fraction | None) -> RootDatum:
    R: list[Root] = []
    simple: list[Root] = []

    def add(parity, d={}, e={}):
        R.append(Root(_vec(nd, ne, d, e), parity))

    if family is Family.PE:
        (n,) = ranks
        nd, ne = 0, n
        for i in range(n):
            for j in range(n):
                if i != j:
                    add(0, e={i: 1, j: -1})
        for i in range(n):
            for j in range(i, n):
                add(1, e={i: 1, j: 1} if i != j else {i: 2})
                if i < j:
                    add(1, e={i: -1, j: -1})
        simple = [Root(_vec(nd, ne, e={i: 1, i + 1: -1}), 0) for i in range(n - 1)]
        h = [Fraction(n - i) for i in range(n)]
    elif family is Family.Q:
        (n,) = ranks
        nd, ne = 0, n
        for p in (0, 1):
            for i in range(n):
                for j in range(n):
                    if i != j:
                        add(p, e={i: 1, j: -1})
        simple = [Root(_vec(nd, ne, e={i: 1, i + 1: -1}), 0) for i in range(n - 1)]
        h = [Fraction(n - i) for i in range(n)]
    elif family is Family.GL:
        m, n = ranks
        nd, ne = m, n
        for i in range(m):
            for j in range(m):
                if i != j:
                    add(0, d={i: 1, j: -1})
        for i in range(n):
            for j in range(n):
                if i != j:
                    add(0, e={i: 1, j: -1})
        for i in range(m):
            for j in range(n):
                add(1, d={i: 1}, e={j: -1})
                add(1, d={i: -1}, e={j: 1})
        simple = [Root(_vec(nd, ne, d={i: 1, i + 1: -1}), 0) for i in range(m - 1)]
        simple += [Root(_vec(nd, ne, e={i: 1, i + 1: -1}), 0) for i in range(n - 1)]
        h = [Fraction(2 * (m + n) - i) for i in range(m)] + [Fraction(n - i) for i in range(n)]
    elif family in (Family.SPO_EVEN, Family.SPO_ODD):
        n, m = ranks
        nd, ne = n, m
        odd_eps = family is Family.SPO_ODD
        for i in range(n):
            for j in range(i + 1, n):
                for s in (1, -1):
                    for t in (1, -1):
                        add(0, d={i: s, j: t})
            add(0, d={i: 2})
            add(0, d={i: -2})
        for i in range(m):
            for j in range(i + 1, m):
                for s in (1, -1):
                    for t in (1, -1):
                        add(0, e={i: s, j: t})
            if odd_eps:
                add(0, e={i: 1})
                add(0, e={i: -1})
        for i in range(n):
            for j in range(m):
                for s in (1, -1):
                    for t in (1, -1):
                        add(1, d={i: s}, e={j: t})
            if odd_eps:
                add(1, d={i: 1})
                add(1, d={i: -1})
        simple = [Root(_vec(nd, ne, d={i: 1, i + 1: -1}), 0) for i in range(n - 1)]
        simple.append(Root(_vec(nd, ne, d={n - 1: 2}), 0))
        simple += [Root(_vec(nd, ne, e={i: 1, i + 1: -1}), 0) for i in range(m - 1)]
        if odd_eps:
            simple.append(Root(_vec(nd, ne, e={m - 1: 1}), 0))
        elif m >= 2:
            simple.append(Root(_vec(nd, ne, e={m - 2: 1, m - 1: 1}), 0))
        # δ's dominate, then ε_1 > ... > ε_m > 0
        big = Fraction(4 * (m + 1))
        h = [big * (n - i + 1) for i in range(n)] + [Fraction(m - j) + Fraction(1, 2) for j in range(m)]
    elif family is Family.D21:
        nd, ne = 1, 2
        for s in (1, -1):
            add(0, d={0: 2 * s})
            add(0, e={0: 2 * s})
            add(0, e={1: 2 * s})
        for s in (1, -1):
            for t in (1, -1):
                for u in (1, -1):
                    add(1, d={0: s}, e={0: t, 1: u})
        simple = [Root(_vec(nd, ne, d={0: 2}), 0), Root(_vec(nd, ne, e={0: 2}), 0), Root(_vec(nd, ne, e={1: 2}), 0)]
        h = [Fraction(10), Fraction(1), Fraction(2)]
    elif family is Family.G3:
        # ε_3 = −ε_1 − ε_2, so short G2 roots are ±ε_1, ±ε_2, ±(ε_1+ε_2)
        nd, ne = 1, 2
        short = [{0: 1}, {1: 1}, {0: -1, 1: -1}]
        for s in (1, -1):
            add(0, d={0: 2 * s})
            for v in short:
                add(0, e={k: s * c for k, c in v.items()})
                add(1, d={0: s}, e={k: c for k, c in v.items()})
                add(1, d={0: s}, e={k: -c for k, c in v.items()})
            add(1, d={0: s})
        for a in range(3):
            for b in range(3):
                if a != b:
                    diff: dict[int, int] = {}
                    for k, c in short[a].items():
                        diff[k] = diff.get(k, 0) + c
                    for k, c in short[b].items():
                        diff[k] = diff.get(k, 0) - c
                    add(0, e={k: c for k, c in diff.items() if c})
        simple = [Root(_vec(nd, ne, d={0: 2}), 0), Root(_vec(nd, ne, e={0: -1, 1: 1}), 0), Root(_vec(nd, ne, e={0: 1}), 0)]
        h = [Fraction(10), Fraction(1), Fraction(2)]
    elif family is Family.F31:
        nd, ne = 1, 3
        half = Fraction(1, 2)
        for s in (1, -1):
            add(0, d={0: s})
            for i in range(3):
                add(0, e={i: s})
                for j in range(i + 1, 3):
                    for t in (1, -1):
                        add(0, e={i: s, j: t})
        for s in (1, -1):
            for a in (1, -1):
                for b in (1, -1):
                    for c in (1, -1):
                        R.append(Root(Weight((a * half, b * half, c * half), (s * half,)), 1))
        simple = [Root(_vec(nd, ne, d={0: 1}), 0)]
        simple += [Root(_vec(nd, ne, e={0: 1, 1: -1}), 0), Root(_vec(nd, ne, e={1: 1, 2: -1}), 0), Root(_vec(nd, ne, e={2: 1}), 0)]
        h = [Fraction(100), Fraction(3), Fraction(2), Fraction(1)]
    else:  # pragma: no cover
        raise ValueError(f"unsupported family {family}")

    roots = tuple(sorted(R))
    if len(set(roots)) != len(roots):
        raise AssertionError("duplicate roots")
    if family is Family.Q:
        # both parities share weights; positivity is by weight alone
        positive = tuple(r for r in roots if sum(a * b for a, b in zip(h, r.weight.coords)) > 0)
    else:
        positive = _positive_by(roots, h)
    return RootDatum(family, ranks, nd, ne, roots, tuple(simple), positive, zeta)


_RANK_COUNT = {
    Family.PE: 1, Family.Q: 1, Family.GL: 2, Family.SPO_EVEN: 2, Family.SPO_ODD: 2,
    Family.D21: 0, Family.G3: 0, Family.F31: 0,
}


def build_root_datum(family: Family | str, *ranks: int, zeta: Number | None = None) -> RootDatum:
    """Root datum for ``family`` at the given ranks.

    ``pe`` and ``q`` take one rank, ``gl``/``spo-even``/``spo-odd`` take two,
    the exceptional families none. ``zeta`` is required (nonzero) for ``d21``.
    """
    try:
        family = Family(family)
    except ValueError:
        raise ValueError(f"unsupported family {family!r}; choose from {[f.value for f in Family]}") from None
    if len(ranks) != _RANK_COUNT[family]:
        raise ValueError(f"{family.value} takes {_RANK_COUNT[family]} rank(s), got {len(ranks)}")
    if any((not isinstance(r, int)) or r < 1 for r in ranks):
        raise ValueError(f"ranks must be positive integers, got {ranks}")
    if family is Family.D21:
        if zeta is None or as_fraction(zeta) == 0:
            raise ValueError("d21 needs a nonzero rational zeta")
        zeta = as_fraction(zeta)
    elif zeta is not None:
        raise ValueError(f"zeta only applies to d21, not {family.value}")
    return _build(family, tuple(ranks), zeta)


def pair(datum: RootDatum, a: Weight, b: Weight) -> Fraction:
    """The invariant form. pe/q use (ε_i, ε_j) = δ_ij; gl/spo use (δ_i, δ_j) = −(ε_i, ε_j) = δ_ij."""
    form = datum.form_rule
    if form is None:
        raise FormUndefined(f"the invariant form of {datum.family.value} is not modelled")
    shape = (datum.n_delta, datum.n_eps)
    if a.shape != shape or b.shape != shape:
        raise ValueError(f"dimension mismatch: datum shape {shape}, weights {a.shape} and {b.shape}")
    sd, se = form
    return sd * sum((x * y for x, y in zip(a.delta, b.delta)), Fraction(0)) + se * sum(
        (x * y for x, y in zip(a.eps, b.eps)), Fraction(0)
    )


def coroot_pairing(datum: RootDatum, lam: Weight, alpha: Root) -> Fraction:
    """(λ, α∨) with α∨ = 2α/(α, α)."""
    aa = pair(datum, alpha.weight, alpha.weight)
    if aa == 0:
        raise ValueError(f"{alpha} is isotropic and has no coroot")
    return 2 * pair(datum, lam, alpha.weight) / aa


def _sum(roots: Iterable[Root], zero: Weight | None) -> Weight:
    total = zero
    for r in roots:
        total = r.weight if total is None else total + r.weight
    if total is None:
        raise ValueError("empty root set: pass zero= to fix the weight shape")
    return total


def rho_signed(roots: Iterable[Root], zero: Weight | None = None) -> Weight:
    """½(Σ even − Σ odd)."""
    roots = list(roots)
    if zero is None and roots:
        zero = Weight.zero(roots[0].weight.shape[1], roots[0].weight.shape[0])
    even = _sum((r for r in roots if r.parity == 0), zero)
    odd = _sum((r for r in roots if r.parity == 1), zero)
    return Fraction(1, 2) * (even - odd)


def odd_sum(roots: Iterable[Root], zero: Weight | None = None) -> Weight:
    """Plain sum of odd roots (the weight of the top exterior power)."""
    roots = list(roots)
    for r in roots:
        if r.parity != 1:
            raise ValueError(f"odd_sum got even root {r}")
    return _sum(roots, zero)


def omega(k: int, n: int) -> Weight:
    """ω_k = ε_1 + ... + ε_k inside an n-coordinate ε-block."""
    return Weight(tuple(1 if i < k else 0 for i in range(n)))


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation of the concatenated coordinates (δ-block first).

    Coordinate i goes to position ``perm[i]`` with sign ``signs[i]``.
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...] = ()

    def __post_init__(self):
        k = len(self.perm)
        if sorted(self.perm) != list(range(k)):
            raise ValueError(f"invalid permutation {self.perm}")
        if not self.signs:
            object.__setattr__(self, "signs", (1,) * k)
        if len(self.signs) != k or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"invalid signs {self.signs}")

    @classmethod
    def identity(cls, k: int) -> "WeylElement":
        return cls(tuple(range(k)))


def weyl_apply(w: WeylElement, lam: Weight) -> Weight:
    coords = lam.coords
    if len(coords) != len(w.perm):
        raise ValueError(f"Weyl element on {len(w.perm)} coordinates applied to {len(coords)}")
    out: list[Fraction] = [Fraction(0)] * len(coords)
    for i, c in enumerate(coords):
        out[w.perm[i]] = c if w.signs[i] == 1 else -c
    k = len(lam.delta)
    return Weight._raw(tuple(out[k:]), tuple(out[:k]))


def _block_reversal(sizes: Sequence[int], offset: int = 0) -> list[int]:
    perm: list[int] = []
    start = offset
    for s in sizes:
        if s < 0:
            raise ValueError(f"negative block size {s}")
        perm += [start + s - 1 - k for k in range(s)]
        start += s
    return perm


def longest_element(spec: RootDatum | int | Sequence[int]) -> WeylElement:
    """w₀ of a datum, of S_n (int), or of a Levi given as consecutive block sizes."""
    if isinstance(spec, int):
        return WeylElement(tuple(_block_reversal([spec])))
    if not isinstance(spec, RootDatum):
        return WeylElement(tuple(_block_reversal(list(spec))))
    d = spec
    f = d.family
    if f in (Family.PE, Family.Q):
        return WeylElement(tuple(_block_reversal([d.n_eps])))
    if f is Family.GL:
        return WeylElement(tuple(_block_reversal([d.n_delta]) + _block_reversal([d.n_eps], d.n_delta)))
    if f in (Family.SPO_EVEN, Family.SPO_ODD):
        k = d.n_delta + d.n_eps
        signs = [-1] * k
        if f is Family.SPO_EVEN and d.n_eps % 2 == 1:
            # type D with odd rank: w₀ = −1 composed with the diagram flip
            signs[-1] = 1
        return WeylElement(tuple(range(k)), tuple(signs))
    raise ValueError(f"longest element not modelled for {f.value}")


def is_integral(datum: RootDatum, lam: Weight) -> bool:
    return all(coroot_pairing(datum, lam, a).denominator == 1 for a in datum.even_roots)


def _require_integral(datum: RootDatum, lam: Weight) -> None:
    # simple coroots span the coroot lattice, so they suffice
    for a in datum.even_simple:
        c = coroot_pairing(datum, lam, a)
        if c.denominator != 1:
            raise NonIntegralWeight(f"(λ, {a}∨) = {c} is not an integer for λ = {lam}")


def is_antidominant(datum: RootDatum, lam: Weight) -> bool:
    """True iff (λ, α∨) is a negative integer for every even simple root α."""
    _require_integral(datum, lam)
    return all(coroot_pairing(datum, lam, a) < 0 for a in datum.even_simple)


def odd_reflection(lam: Weight, gamma: Root, datum: RootDatum) -> Weight:
    """Highest weight after reflecting across the odd isotropic simple root γ."""
    if gamma.parity != 1:
        raise ValueError(f"{gamma} is not odd")
    if datum.family is Family.PE:
        raise ValueError("pe uses its own rule; see periplectic.tilting_odd_reflection")
    if pair(datum, gamma.weight, gamma.weight) != 0:
        raise ValueError(f"{gamma} is not isotropic")
    return lam if pair(datum, lam, gamma.weight) == 0 else lam - gamma.weight
