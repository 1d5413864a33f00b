# %%
# Which projective covers are injective? One coordinate test per family.
from itertools import product

from periplex import Weight
from periplex.periplectic import pi_predicates, standard_label
from periplex.piclass import pi_spo_even, spo_basic, spo_even_oracle, verdict

# %%
# pe(2), standard Borel: injective iff λ is strictly increasing.
bs = standard_label(2)
for lam in [(-1, 0), (0, 0), (1, 0), (-3, 2)]:
    p = pi_predicates(bs, lam, 2)
    print(f"λ = {lam}: injective {p.injective}, self-dual {p.selfdual}, P(λ) = I({p.injective_label})")

# %%
# spo(2|2): the coordinate test against the odd-reflection oracle.
agree = total = 0
for l1, m1 in product(range(-4, 5), repeat=2):
    if spo_basic(1, 1, [l1], [m1]):
        total += 1
        agree += pi_spo_even(1, 1, [l1], [m1]) == (spo_even_oracle(1, 1, [l1], [m1]) < 0)
print(f"spo(2|2): {agree}/{total} basic weights agree")

# %%
# Exceptional families with the failing condition named.
print(verdict("g3", (), [0], [-2, -3]))
print(verdict("f31", (), ["3/2"], ["-5/2", "-3/2", "-1/2"]))
print(verdict("d21", (), [1], [-1, -1], zeta=1))
