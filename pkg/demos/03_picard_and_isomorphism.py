"""Small-alpha vs large-alpha moduli spaces as projective bundles over the curve.

Run with ``python demos/03_picard_and_isomorphism.py``.
"""

# %%
from coherent_elliptic import grassmannian_model, iso_test, picard_invariants

# %% [markdown]
# The Picard bundle over M(n, d) = X has rank d, and its first Chern class
# is s times the point class, where r*d - s*n = 1.

# %%
inv = picard_invariants(5, 7)
print(inv)
assert inv.r * 7 - inv.s * 5 == 1

# %% [markdown]
# For k = 1 both extreme moduli spaces are P^(d-1)-bundles over X. When
# s + s' is non-zero mod d they cannot be isomorphic.

# %%
print(grassmannian_model(5, 7, 1).to_json())
for n, d in [(5, 7), (3, 7), (4, 7)]:
    v = iso_test(n, d, 1)
    print((n, d), v.to_json(), "   2n mod d =", (2 * n) % d)
