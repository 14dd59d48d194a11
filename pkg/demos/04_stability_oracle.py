"""Checking small-alpha stability by brute force over summand subsets.

Run with ``python demos/04_stability_oracle.py``.
"""

# %%
from coherent_elliptic import GenericSystemModel, ModuliQuery, candidates, generic_polystable, is_nonempty
from coherent_elliptic.oracle import is_generically_stable_small_alpha, sub_wall_alpha

# %% [markdown]
# The general bundle of rank 4 and degree 2 is a sum of two stable bundles
# of type (2, 1). With one section the generic system is stable; taking all
# sections (k = d) it splits as a direct sum and is not.

# %%
E = generic_polystable(4, 2)
print(E)
for k in (1, 2):
    model = GenericSystemModel(E, k)
    alpha = sub_wall_alpha(4, 2, k)
    for c in candidates(model):
        print(f"  k={k} subset={c.subset} overlap={c.generic_overlap}")
    print(f"k={k} alpha={alpha}: oracle={is_generically_stable_small_alpha(model, alpha)}"
          f" theorem={is_nonempty(ModuliQuery(4, 2, k, alpha))}")
