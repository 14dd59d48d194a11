"""Critical values of alpha and the flips that happen there.

Run with ``python demos/02_walls_and_flips.py``.
"""

# %%
from fractions import Fraction

from coherent_elliptic import enumerate_walls, flip_locus_dim

# %% [markdown]
# Type (4, 3, 2) has a single critical value. It comes from splitting off
# a stable bundle of type (1, 1) with no sections.

# %%
for wall in enumerate_walls(4, 3, 2):
    print("alpha =", wall.alpha)
    for dec in wall.decompositions:
        print("  ", dec, "C12 =", dec.c12, "C21 =", dec.c21)
        print("   dim G^- =", flip_locus_dim(dec, "minus"), " dim G^+ =", flip_locus_dim(dec, "plus"))

# %% [markdown]
# For d = 3, k = 2 a wall exists exactly when n = 1 mod 3, at 3/(2(n-1)).

# %%
for n in range(2, 17):
    walls = enumerate_walls(n, 3, 2)
    print(n, n % 3, [str(w.alpha) for w in walls])
    assert [w.alpha for w in walls] == ([Fraction(3, 2 * (n - 1))] if n % 3 == 1 else [])

# %% [markdown]
# A busier example: (5, 7, 1) has two walls, with different flip sizes on
# either side.

# %%
for wall in enumerate_walls(5, 7, 1):
    print(wall.to_json())
