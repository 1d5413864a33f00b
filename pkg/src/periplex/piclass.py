"""When is the projective cover P(λ) injective? Coordinate tests per family.

Two-block families write λ = Σ λ_i δ_i + Σ μ_j ε_j; ``lam`` is the δ-block
and ``mu`` the ε-block. Each ``pi_*`` predicate has a ``*_witness`` twin
naming the first failing condition (None when injective).

>>> pi_spo_even(1, 1, [0], [-1])
True
>>> spo_even_oracle(1, 1, [-2], [5])
Fraction(-3, 1)
>>> pi_f31_witness("3/2", "-5/2", "-3/2", "-1/2")
'mu_1 + 1/2 - mu_2 - mu_3 != 0 when lambda_1 = 3/2'
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .weights import (
    Family,
    NonIntegralWeight,
    RootDatum,
    Weight,
    as_fraction,
    build_root_datum,
    coroot_pairing,
    is_antidominant,
    is_integral,
    odd_reflection,
    pair,
    rho_signed,
    Root,
)

__all__ = [
    "FamilyWeight",
    "pi_type_one",
    "pi_qn",
    "pi_qn_witness",
    "spo_basic",
    "pi_spo_even",
    "pi_spo_even_witness",
    "pi_spo_even_rho",
    "spo_even_oracle",
    "pi_spo_odd",
    "pi_spo_odd_witness",
    "pi_spo_odd_rho",
    "pi_d21",
    "pi_d21_witness",
    "pi_g3",
    "pi_g3_witness",
    "pi_f31",
    "pi_f31_witness",
    "verdict",
]

Q = Sequence  # coordinates: ints, Fractions or "p/q" strings


@dataclass(frozen=True)
class FamilyWeight:
    family: Family
    lam: tuple[Fraction, ...]
    mu: tuple[Fraction, ...]
    zeta: Fraction | None = None

    def to_json(self) -> dict:
        out = {"lambda": [str(c) for c in self.lam], "mu": [str(c) for c in self.mu]}
        if self.zeta is not None:
            out["zeta"] = str(self.zeta)
        return out


def _fr(xs: Q) -> tuple[Fraction, ...]:
    return tuple(as_fraction(x) for x in xs)


def _ints(xs: Sequence[Fraction], what: str) -> None:
    for i, x in enumerate(xs, start=1):
        if x.denominator != 1:
            raise NonIntegralWeight(f"{what}_{i} = {x} is not an integer")


def _chain(xs: Sequence[Fraction]) -> bool:
    return all(xs[i] < xs[i + 1] for i in range(len(xs) - 1))


def pi_type_one(datum: RootDatum, lam: Weight) -> bool:
    """Injective iff λ is anti-dominant (type I algebras)."""
    ok = datum.family in (Family.PE, Family.GL) or (datum.family is Family.SPO_EVEN and datum.ranks[1] == 1)
    if not ok:
        raise ValueError(f"{datum.family.value}{datum.ranks} is not of type I")
    return is_antidominant(datum, lam)


def pi_qn_witness(n: int, lam: Q) -> str | None:
    lam = _fr(lam)
    if len(lam) != n:
        raise ValueError(f"q({n}) weights have {n} coordinates")
    if not is_integral(build_root_datum("q", n), Weight(lam)):
        raise NonIntegralWeight(f"{lam} has non-integral coordinate differences")
    for i in range(n - 1):
        if lam[i] > lam[i + 1]:
            return "lambda weakly increasing"
        if lam[i] == lam[i + 1] == 0:
            return "equal neighbours nonzero"
    return None


def pi_qn(n: int, lam: Q) -> bool:
    return pi_qn_witness(n, lam) is None


def _spo_args(n: int, m: int, lam: Q, mu: Q) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    lam, mu = _fr(lam), _fr(mu)
    if len(lam) != n or len(mu) != m:
        raise ValueError(f"expected {n} lambda and {m} mu coordinates, got {len(lam)} and {len(mu)}")
    _ints(lam, "lambda")
    _ints(mu, "mu")
    return lam, mu


def _mu_chain_even(mu: Sequence[Fraction]) -> bool:
    # μ_1 < ... < μ_{m-1} < −|μ_m|; nothing to check when m = 1
    m = len(mu)
    return m == 1 or (_chain(mu[:-1]) and mu[-2] < -abs(mu[-1]))


def spo_basic(n: int, m: int, lam: Q, mu: Q) -> bool:
    """λ strictly increasing and the even-case μ chain."""
    lam, mu = _spo_args(n, m, lam, mu)
    return _chain(lam) and _mu_chain_even(mu)


def pi_spo_even_witness(n: int, m: int, lam: Q, mu: Q) -> str | None:
    lam, mu = _spo_args(n, m, lam, mu)
    if not _chain(lam):
        return "lambda strictly increasing"
    if not lam[-1] < m:
        return "lambda_n < m"
    if not _mu_chain_even(mu):
        return "mu_1 < ... < mu_(m-1) < -|mu_m|"
    if lam[-1] == m - 1 and mu[-1] == 0:
        return "mu_m != 0 when lambda_n = m-1"
    return None


def pi_spo_even(n: int, m: int, lam: Q, mu: Q) -> bool:
    return pi_spo_even_witness(n, m, lam, mu) is None


def _shifted(datum: RootDatum, lam: Sequence[Fraction], mu: Sequence[Fraction]) -> Weight:
    return Weight(tuple(mu), tuple(lam)) + rho_signed(datum.positive)


def _unit(datum: RootDatum, block: str, i: int) -> Weight:
    d = [0] * datum.n_delta
    e = [0] * datum.n_eps
    (d if block == "delta" else e)[i] = 1
    return Weight(tuple(e), tuple(d))


def _spo_even_rho(n: int, m: int, lam: Q, mu: Q, literal: bool = False) -> bool:
    lam, mu = _spo_args(n, m, lam, mu)
    g = build_root_datum("spo-even", n, m)
    x = _shifted(g, lam, mu)
    if any(coroot_pairing(g, x, a) > 0 for a in g.even_simple):
        return False
    if pair(g, x, _unit(g, "delta", n - 1)) == 0:
        last = pair(g, x, _unit(g, "eps", m - 1))
        # the clause must forbid μ_m = 0, i.e. demand a nonzero pairing
        return last == 0 if literal else last != 0
    return True


def pi_spo_even_rho(n: int, m: int, lam: Q, mu: Q) -> bool:
    """ρ-shifted form: (λ+ρ, α∨) ≤ 0 on even simple roots, plus the δ_n/ε_m clause."""
    return _spo_even_rho(n, m, lam, mu)


def spo_even_oracle(n: int, m: int, lam: Q, mu: Q) -> Fraction:
    """(λ', δ_n) after odd reflections along δ_n−ε_1, ..., δ_n−ε_m."""
    lam, mu = _spo_args(n, m, lam, mu)
    if not (_chain(lam) and _mu_chain_even(mu)):
        raise ValueError(f"lambda={lam}, mu={mu} fails the basic chain conditions")
    g = build_root_datum("spo-even", n, m)
    x = Weight(tuple(mu), tuple(lam))
    dn = _unit(g, "delta", n - 1)
    for j in range(m):
        x = odd_reflection(x, Root(dn - _unit(g, "eps", j), 1), g)
    return pair(g, x, dn)


def pi_spo_odd_witness(n: int, m: int, lam: Q, mu: Q) -> str | None:
    lam, mu = _spo_args(n, m, lam, mu)
    if not _chain(lam):
        return "lambda strictly increasing"
    if not lam[-1] < m:
        return "lambda_n < m"
    if not (_chain(mu) and mu[-1] < 0):
        return "mu_1 < ... < mu_m < 0"
    return None


def pi_spo_odd(n: int, m: int, lam: Q, mu: Q) -> bool:
    return pi_spo_odd_witness(n, m, lam, mu) is None


def pi_spo_odd_rho(n: int, m: int, lam: Q, mu: Q) -> bool:
    lam, mu = _spo_args(n, m, lam, mu)
    g = build_root_datum("spo-odd", n, m)
    x = _shifted(g, lam, mu)
    return all(coroot_pairing(g, x, a) <= 0 for a in g.even_simple)


def pi_d21_witness(zeta, l1, m1, m2) -> str | None:
    zeta = as_fraction(zeta)
    if zeta == 0:
        raise ValueError("zeta must be nonzero")
    l1, m1, m2 = _fr((l1, m1, m2))
    _ints((l1, m1, m2), "coordinate")
    if l1 > 1:
        return "lambda_1 <= 1"
    if not (m1 < 0 and m2 < 0):
        return "mu_1, mu_2 < 0"
    if l1 == 1 and (1 + m1 == (1 + m2) * zeta or 1 + m1 == -(1 + m2) * zeta):
        return "1 + mu_1 != ±(1 + mu_2) zeta when lambda_1 = 1"
    return None


def pi_d21(zeta, l1, m1, m2) -> bool:
    return pi_d21_witness(zeta, l1, m1, m2) is None


def pi_g3_witness(l1, m1, m2) -> str | None:
    l1, m1, m2 = _fr((l1, m1, m2))
    _ints((l1, m1, m2), "coordinate")
    if l1 > 2:
        return "lambda_1 <= 2"
    if not (2 * m1 < m2 < m1):
        return "2 mu_1 < mu_2 < mu_1"
    return None


def pi_g3(l1, m1, m2) -> bool:
    return pi_g3_witness(l1, m1, m2) is None


def pi_f31_witness(l1, m1, m2, m3) -> str | None:
    xs = _fr((l1, m1, m2, m3))
    # every entry in ½Z; the μ block must be all integers or all half-integers
    if any((2 * x).denominator != 1 for x in xs) or len({x.denominator for x in xs[1:]}) != 1:
        raise NonIntegralWeight(f"{[str(x) for x in xs]}: need entries in Z/2 with mu all integers or all half-integers")
    l1, m1, m2, m3 = xs
    half = Fraction(1, 2)
    if l1 > 3 * half:
        return "lambda_1 <= 3/2"
    if not (m1 < m2 < m3 <= -half):
        return "mu_1 < mu_2 < mu_3 <= -1/2"
    if l1 == 3 * half and m1 + half - m2 - m3 == 0:
        return "mu_1 + 1/2 - mu_2 - mu_3 != 0 when lambda_1 = 3/2"
    return None


def pi_f31(l1, m1, m2, m3) -> bool:
    return pi_f31_witness(l1, m1, m2, m3) is None


def verdict(family: str, params: Sequence = (), lam: Q = (), mu: Q = (), zeta=None) -> dict:
    """Uniform entry point returning {"family", "weight", "injective", "witness"}."""
    fam = Family(family)
    fw = FamilyWeight(fam, _fr(lam), _fr(mu), None if zeta is None else as_fraction(zeta))
    params = tuple(int(p) for p in params)
    if fam in (Family.PE, Family.GL):
        g = build_root_datum(fam, *params)
        ok = pi_type_one(g, g.weight(eps=fw.mu, delta=fw.lam))
        witness = None if ok else "anti-dominant"
    elif fam is Family.Q:
        (n,) = params
        witness = pi_qn_witness(n, fw.mu)
    elif fam is Family.SPO_EVEN:
        witness = pi_spo_even_witness(*params, fw.lam, fw.mu)
    elif fam is Family.SPO_ODD:
        witness = pi_spo_odd_witness(*params, fw.lam, fw.mu)
    elif fam is Family.D21:
        if zeta is None:
            raise ValueError("d21 needs zeta")
        witness = pi_d21_witness(zeta, *fw.lam, *fw.mu)
    elif fam is Family.G3:
        witness = pi_g3_witness(*fw.lam, *fw.mu)
    else:
        witness = pi_f31_witness(*fw.lam, *fw.mu)
    return {"family": fam.value, "weight": fw.to_json(), "injective": witness is None, "witness": witness}
