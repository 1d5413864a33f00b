# %%
# Borel and parabolic subalgebras of pe(n), up to conjugacy.
# A rational weight δ splits the roots by the sign of (δ, α); the
# canonical bipartition names the split.
from periplex import build_root_datum, enumerate_brp
from periplex.partitions import to_sign_form
from periplex.periplectic import (
    borel_included,
    borel_odd_dim,
    borel_odd_roots,
    canonicalize,
    hasse_edges,
    levi_type,
    to_dot,
)

n = 3
g = build_root_datum("pe", n)
print(f"pe({n}): {len(g.even_roots)} even roots, {len(g.odd_roots)} odd roots")

# %%
# Many weights, few splits. Scaling or nudging δ keeps the label.
for delta in [(5, 1, -2), (50, 10, -20), (3, 1, -1), (2, 0, 0), ("1/3", "1/3", "-1/3")]:
    x = canonicalize(delta, n)
    print(f"δ = {delta!s:22} -> {x}   levi {levi_type(x, n)}")

# %%
# Borels: 2^n of them, one per way of distributing the staircase.
borels = enumerate_brp(n, "BRP00")
for x in borels:
    roots = ", ".join(str(r.weight) for r in borel_odd_roots(x, n))
    print(f"{str(x):18} dim b_1 = {borel_odd_dim(x, n)}   {roots}")

# %%
# Inclusions between Borels are rare: each covers at most one other.
edges = hasse_edges(borels, borel_included)
for i, j in edges:
    print(f"{borels[i]}  ⊂  {borels[j]}")

# %%
# Reduced parabolics (purely even Levi) in sign-form notation.
for x in enumerate_brp(n, "BRP0"):
    s = to_sign_form(x)
    print(f"κ = {s.kappa}, f = {s.f}   {x}")

print()
print(to_dot([str(x) for x in borels], edges, "borels"))
