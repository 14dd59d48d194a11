"""When is G(alpha; n, d, k) non-empty, and how big is it?

Run with ``python demos/01_nonemptiness_and_dimension.py``.
"""

# %%
from fractions import Fraction

from coherent_elliptic import ModuliQuery, alpha_range, brill_noether, generic_shape, is_nonempty

# %% [markdown]
# On an elliptic curve the expected dimension k(d-k)+1 does not involve the
# rank, and every non-empty moduli space has exactly that dimension.

# %%
for d, k in [(3, 2), (7, 3), (5, 0)]:
    print(f"beta({d},{k}) = {brill_noether(d, k)}")

# %% [markdown]
# The set of alpha with a non-empty moduli space is an open interval. Below
# are a few types: a bounded interval (k < n), an unbounded one (k >= n),
# an empty one (k = d with gcd(n, d) > 1), and the k = 0 case where alpha
# plays no role at all.

# %%
for n, d, k in [(4, 3, 2), (3, 7, 5), (2, 2, 2), (3, 2, 0), (4, 2, 0)]:
    print(f"I({n},{d},{k}) = {alpha_range(n, d, k)}")

# %% [markdown]
# Membership is decided by one strict inequality. At the right endpoint
# d/(n-k) the space is already empty.

# %%
for alpha in [Fraction(1, 2), Fraction(7, 5), Fraction(3, 2), Fraction(2)]:
    print(f"alpha={alpha}: non-empty={is_nonempty(ModuliQuery(4, 3, 2, alpha))}")

# %% [markdown]
# The general point of the moduli space has one of three shapes according to
# whether k < n, k = n or k > n.

# %%
for n, d, k in [(3, 5, 2), (2, 3, 2), (2, 5, 3)]:
    print((n, d, k), generic_shape(ModuliQuery(n, d, k, Fraction(1))))
