# %% [markdown]
# ### Weight distribution of the cyclic code C
#
# Each a in F_{p^m}^k gives the codeword (f_a(1), f_a(pi), ..., f_a(pi^(q-2)))
# with f_a(x) = sum_j a_j x^(p^(j d)).  A nonzero codeword has weight
# p^m - p^(e r) where p^(e r) is the number of roots of f_a.  The number of
# codewords with each r is computed three ways.

# %%
from linrs import (FieldParams, field_build, weight_distribution_bruteforce,
                   weight_distribution_formula, weight_distribution_moebius)
from linrs.code import codeword, codeword_weight

ctx = field_build(FieldParams(2, 2, 1, 2))
for a in [(1, 0), (1, 1), (2, 3)]:
    print(a, codeword(ctx, a), "weight", codeword_weight(ctx, a))

# %% [markdown]
# Closed form, exhaustive enumeration, and Moebius inversion over the
# subspace lattice agree exactly.

# %%
for pt in [(2, 2, 1, 2), (2, 4, 2, 2), (2, 4, 1, 4), (3, 3, 1, 3)]:
    params = FieldParams(*pt)
    ctx = field_build(params)
    f = weight_distribution_formula(params)
    b = weight_distribution_bruteforce(ctx)
    mo = weight_distribution_moebius(ctx)
    print(pt, f.counts, "agree" if f.counts == b.counts == mo.counts else "DISAGREE")

# %% [markdown]
# The formula needs no enumeration at all, so large parameters are instant.

# %%
big = weight_distribution_formula(FieldParams(3, 10, 2, 5))
for r, w, n in big.rows():
    print(f"r={r}  weight={w}  count={n}")
print("sum =", big.total, "= 3^50 - 1:", big.total == 3 ** 50 - 1)
