# %%
# Label bookkeeping between categories O: the Ringel map, duality and
# the tilting label, all exact.
from periplex import Weight
from periplex.partitions import to_sign_form
from periplex.periplectic import (
    duality_weight_map,
    hat_dual,
    pi_predicates,
    reverse_label,
    ringel_weight_map,
    standard_label,
    tilting_odd_reflection,
)
from periplex.weights import Root

n = 3
bs = standard_label(n)
s = to_sign_form(bs)
lam = Weight.of(2, -1, 0)

# %%
# The Ringel map is an involution.
r = ringel_weight_map(s, lam)
print("λ         ", lam)
print("Ringel(λ) ", r)
print("twice     ", ringel_weight_map(s, r))

# %%
# Duality sends the standard Borel to the reverse one.
print("hat dual of", bs, "is", hat_dual(bs), "=", reverse_label(n))
print("duality of Ringel(λ):", duality_weight_map(r, n))
print("tilting label       :", pi_predicates(bs, lam, n).tilting_label[1])

# %%
# Crossing an odd simple root moves a tilting label by α or 2α.
for alpha in [Weight.of(0, 0, 2), Weight.of(1, 1, 0), Weight.of(0, 1, 1)]:
    for mu in [Weight.of(1, 1, 0), Weight.of(2, 0, 0)]:
        print(f"μ = {mu}, α = {alpha}:  {tilting_odd_reflection(mu, Root(alpha, 1))}")
