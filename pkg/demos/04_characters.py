# %%
# Truncated Verma characters and the Δ-flag of an induced even Verma.
from periplex import Weight, enumerate_brp
from periplex.characters import delta_flag_labels, verify_flag_identity, verma_character
from periplex.weights import ParityWeight

n = 2
lam = ParityWeight(Weight.zero(n))

# %%
# The same weight seen from each Borel: the lowering roots differ.
for b in enumerate_brp(n, "BRP00"):
    ch = verma_character(b, lam, 2, n)
    terms = sorted(ch.terms.items(), key=lambda kv: kv[0].weight.coords)
    print(b, " ".join(f"{c}·e^{t.weight}{'*' if t.parity else ''}" for t, c in terms))

# %%
# Inducing from the even part gives 2^dim b_1 Vermas, labels below.
b = enumerate_brp(n, "BRP00")[1]
for pw in delta_flag_labels(b, Weight.zero(n), n):
    print("  Δ", pw.weight, "odd" if pw.parity else "even")

# %%
# The identity holds term by term up to the truncation depth.
for b in enumerate_brp(n, "BRP00"):
    print(b, "flag identity at depth 6:", bool(verify_flag_identity(b, Weight.of(1, -1), 6, n)))
