# %% [markdown]
# ### Finite fields and the subfield F_{p^e}
#
# A `FieldContext` is GF(p^m) built from the smallest primitive polynomial,
# together with the parameters (d, k) and the embedded subfield F_{p^e},
# e = gcd(m, d).  Elements are integers whose base-p digits are polynomial
# coefficients, low degree first.

# %%
from linrs import FieldParams, field_build, find_primitive_poly

params = FieldParams(p=2, m=4, d=2, k=2)
ctx = field_build(params)
print("e =", params.e, " modulus =", list(ctx.modulus))
print("pi =", ctx.pi, " order of pi =", ctx.multiplicative_order(ctx.pi))

# %% [markdown]
# The exp table lists pi^0, pi^1, ...; multiplication is log addition.

# %%
print("exp table:", ctx.exp_table)
print("pi * pi^3 =", ctx.mul(ctx.pi, ctx.pow(ctx.pi, 3)), "= pi^4 =", ctx.exp_table[4])

# %% [markdown]
# F_4 sits inside F_16 as the fixed points of x -> x^4.  Every element has
# unique coordinates over it in the basis (1, pi).

# %%
print("subfield:", ctx.subfield.elements)
for x in (0, 1, ctx.pi, 13):
    c = ctx.coords_over_subfield(x)
    print(f"coords({x}) = {c} -> back to {ctx.from_coords(c)}")
print("Tr(pi) =", ctx.trace_to_subfield(ctx.pi))

# %% [markdown]
# Other fields, for comparison.

# %%
for p, m in [(2, 2), (3, 2), (5, 3), (2, 8)]:
    print(f"GF({p}^{m}):", find_primitive_poly(p, m))
