"""2-restricted partitions and the bipartition classes BRP, BRP⁰, BRP⁰⁰.

Partitions are plain tuples of positive integers, weakly decreasing, with no
trailing zeros. ``()`` is the empty partition.

>>> enumerate_brp(2, "BRP00")
[Bipartition(mu=(2, 1), nu=()), Bipartition(mu=(2,), nu=(1,)), Bipartition(mu=(1,), nu=(2,)), Bipartition(mu=(), nu=(2, 1))]
>>> to_sign_form(Bipartition((2,), (1,)))
SignForm(kappa=(2, 1), f='+-')
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, NewType, Sequence

__all__ = [
    "Partition",
    "Bipartition",
    "SignForm",
    "BRPClass",
    "is_partition",
    "is_restricted",
    "staircase",
    "merge",
    "restricted_partitions",
    "classify_bipartition",
    "to_sign_form",
    "from_sign_form",
    "enumerate_brp",
    "brp_leq",
    "dual",
]

Partition = NewType("Partition", tuple)


def is_partition(p: Sequence[int]) -> bool:
    return all(isinstance(x, int) and x > 0 for x in p) and all(
        p[i] >= p[i + 1] for i in range(len(p) - 1)
    )


def _partition(p: Sequence[int], what: str = "partition") -> Partition:
    p = tuple(p)
    if not is_partition(p):
        raise ValueError(f"{what} {p} is not weakly decreasing positive integers")
    return Partition(p)


def is_restricted(p: Sequence[int]) -> bool:
    """Consecutive parts (including a virtual trailing zero) differ by 0 or 1."""
    if not is_partition(p):
        return False
    padded = tuple(p) + (0,)
    return all(0 <= padded[i] - padded[i + 1] <= 1 for i in range(len(p)))


def staircase(n: int) -> Partition:
    """∂ⁿ = (n, n−1, ..., 1)."""
    return Partition(tuple(range(n, 0, -1)))


def merge(mu: Sequence[int], nu: Sequence[int]) -> Partition:
    """Multiset union μ∗ν, sorted decreasingly."""
    return Partition(tuple(sorted(tuple(mu) + tuple(nu), reverse=True)))


def restricted_partitions(r: int, exact: bool = False) -> list[Partition]:
    """RP_r (length ≤ r), or RP⁰_r (length exactly r) when ``exact``."""
    out: list[Partition] = [] if exact else [Partition(())]
    for length in ([r] if exact else range(1, r + 1)):
        if length == 0:
            out.append(Partition(()))
            continue
        # bottom part is 1; each step upward adds 0 or 1
        for steps in product((0, 1), repeat=length - 1):
            parts = [1]
            for s in steps:
                parts.append(parts[-1] + s)
            out.append(Partition(tuple(reversed(parts))))
    return sorted(out, reverse=True)


@dataclass(frozen=True)
class Bipartition:
    mu: tuple[int, ...] = ()
    nu: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "mu", _partition(self.mu, "mu"))
        object.__setattr__(self, "nu", _partition(self.nu, "nu"))

    @property
    def merged(self) -> Partition:
        return merge(self.mu, self.nu)

    def to_json(self) -> dict:
        return {"mu": list(self.mu), "nu": list(self.nu)}

    @classmethod
    def from_json(cls, obj: dict) -> "Bipartition":
        extra = set(obj) - {"mu", "nu"}
        if extra:
            raise ValueError(f"unexpected bipartition keys {sorted(extra)}")
        return cls(tuple(obj.get("mu", ())), tuple(obj.get("nu", ())))

    def __str__(self):
        show = lambda p: "(" + ",".join(map(str, p)) + ")" if p else "∅"
        return f"({show(self.mu)}, {show(self.nu)})"


@dataclass(frozen=True)
class SignForm:
    kappa: tuple[int, ...]
    f: str

    def __post_init__(self):
        kappa = tuple(self.kappa)
        if not is_restricted(kappa):
            raise ValueError(f"kappa {kappa} is not a 2-restricted partition")
        if len(self.f) != len(kappa) or set(self.f) - {"+", "-"}:
            raise ValueError(f"f must be a +/- string of length {len(kappa)}, got {self.f!r}")
        for i in range(len(kappa) - 1):
            if kappa[i] == kappa[i + 1] and self.f[i] != self.f[i + 1]:
                raise ValueError(f"f changes sign inside the repeated part {kappa[i]}")
        object.__setattr__(self, "kappa", kappa)

    @property
    def r(self) -> int:
        return len(self.kappa)

    def to_json(self) -> dict:
        return {"kappa": list(self.kappa), "f": self.f}

    @classmethod
    def from_json(cls, obj: dict) -> "SignForm":
        return cls(tuple(obj["kappa"]), obj["f"])


class BRPClass(NamedTuple):
    brp: bool
    brp0: bool
    brp00: bool


def classify_bipartition(x: Bipartition, n: int) -> BRPClass:
    k = x.merged
    brp = is_restricted(k) and len(k) <= n
    brp0 = brp and len(k) == n and not (set(x.mu) & set(x.nu))
    brp00 = brp0 and k == staircase(n)
    return BRPClass(brp, brp0, brp00)


def to_sign_form(x: Bipartition) -> SignForm:
    n = len(x.mu) + len(x.nu)
    if not classify_bipartition(x, n).brp0:
        raise ValueError(f"{x} is not in BRP⁰_{n}")
    mu = set(x.mu)
    kappa = x.merged
    return SignForm(kappa, "".join("+" if k in mu else "-" for k in kappa))


def from_sign_form(s: SignForm) -> Bipartition:
    if s.r == 0 or s.kappa[-1] != 1:
        raise ValueError(f"kappa {s.kappa} has no part 1, so it is not in RP⁰")
    mu = tuple(k for k, c in zip(s.kappa, s.f) if c == "+")
    nu = tuple(k for k, c in zip(s.kappa, s.f) if c == "-")
    return Bipartition(mu, nu)


def _splits(kappa: Partition, shared: bool) -> list[Bipartition]:
    counts = sorted(Counter(kappa).items(), reverse=True)
    # for each distinct part choose how many copies go to mu
    choices = [range(c + 1) if shared else (0, c) for _, c in counts]
    out = []
    for pick in product(*choices):
        mu: list[int] = []
        nu: list[int] = []
        for (v, c), k in zip(counts, pick):
            mu += [v] * k
            nu += [v] * (c - k)
        out.append(Bipartition(tuple(mu), tuple(nu)))
    return out


def enumerate_brp(n: int, kind: str = "BRP") -> list[Bipartition]:
    """All of BRP_n, BRP⁰_n or BRP⁰⁰_n, in descending lexicographic (μ, ν) order.

    Descending tuple order puts (2,1) before (2), i.e. longer first on ties.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    kind = kind.upper().replace("⁰", "0")
    if kind == "BRP":
        out = [x for k in restricted_partitions(n) for x in _splits(k, True)]
    elif kind == "BRP0":
        out = [x for k in restricted_partitions(n, exact=True) for x in _splits(k, False)]
    elif kind == "BRP00":
        out = _splits(staircase(n), False)
    else:
        raise ValueError(f"unknown class {kind!r}; use BRP, BRP0 or BRP00")
    return sorted(out, key=lambda x: (x.mu, x.nu), reverse=True)


def brp_leq(a: SignForm, b: SignForm) -> bool:
    """Inclusion order on reduced parabolics given by sign forms."""
    if a.r != b.r:
        raise ValueError(f"sign forms of different lengths {a.r} and {b.r}")
    n = a.r
    diff = [x - y for x, y in zip(a.kappa, b.kappa)]
    if any(d < 0 for d in diff) or any(diff[i] < diff[i + 1] for i in range(n - 1)):
        return False
    if a.f[:-1] != b.f[:-1]:
        return False
    return (a.f[-1], b.f[-1]) != ("+", "-")


def dual(x: Bipartition) -> Bipartition:
    return Bipartition(x.nu, x.mu)
