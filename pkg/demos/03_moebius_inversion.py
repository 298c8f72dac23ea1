# %% [markdown]
# ### Subspace lattices and q-binomial Moebius inversion
#
# The subspaces of F_q^n are enumerated as RREF matrices.  Their number by
# dimension is the Gaussian binomial, and mu(U) = (-1)^dim q^(dim(dim-1)/2)
# inverts sums over subspaces.

# %%
from linrs.lattice import Lattice, inversion_check, moebius_delta_sums, random_function
from linrs.qbinom import gaussian_binom, product_formula_coeffs

lat = Lattice.over(3, 3)
print("subspaces of F_3^3 by dimension:", lat.counts_by_dim())
print("Gaussian binomials:            ", [gaussian_binom(3, i, 3) for i in range(4)])

# %% [markdown]
# sum over V <= U of mu(V) is 1 for U = 0 and 0 otherwise.

# %%
sums = moebius_delta_sums(lat)
print("distinct delta sums:", sorted(set(sums)), " at U = 0:", sums[0])

# %% [markdown]
# Round trip through zeta and Moebius sums on a random table.

# %%
f = random_function(lat, seed=1)
g = lat.zeta_sum(f)
print("recovered:", lat.moebius_sum(g) == f, " checker:", inversion_check(3, 3, seed=1, lattice=lat))

# %% [markdown]
# The identity behind it: prod (1 + q^i t) has coefficients q^(i(i-1)/2) binom(n, i)_q.

# %%
print(product_formula_coeffs(4, 2))
print([2 ** (i * (i - 1) // 2) * gaussian_binom(4, i, 2) for i in range(5)])
