# %% [markdown]
# ### An identity between Gaussian binomials in q and q^2
#
#   binom(u,i)_{q^2} sum_j q^j binom(i,j)_{q^2} = binom(u,i)_q prod_{j<i} (1 + q^(u-j))
#
# Checked exactly on a grid; nothing is proved here.

# %%
from linrs.qbinom import conjecture_sweep, verify_conjecture

print(verify_conjecture(2, 2, 1))
print(verify_conjecture(3, 6, 4))

# %%
cases = conjecture_sweep([2, 3, 4, 5, 7, 8, 9, 11, 13, 16], 12)
print(len(cases), "cases, all hold:", all(c.holds for c in cases))
largest = max(cases, key=lambda c: c.lhs)
print("largest side:", largest.q, largest.u, largest.i, len(str(largest.lhs)), "digits")
