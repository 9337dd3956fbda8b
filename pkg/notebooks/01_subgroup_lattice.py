# %% [markdown]
# # The subgroup lattice of (Z_p)^k
#
# Subgroups of (Z_p)^k are subspaces over F_p. We hold each one in reduced
# row-echelon form, so equal subspaces print the same way.

# %%
from qubatch import (Subspace, complements_of, enumerate_lattice, enumerate_subspaces,
                     gaussian_binomial, intersect, sum_subspaces, superspaces_containing)

# %% [markdown]
# Slice sizes agree with the Gaussian binomial coefficients.

# %%
for p, k in [(2, 3), (2, 4), (3, 3)]:
    sizes = [len(sl) for sl in enumerate_lattice(k, p)]
    print(f"(Z_{p})^{k}:", sizes, [gaussian_binomial(k, m, p) for m in range(1, k)])

# %% [markdown]
# The seven order-4 subgroups of (Z_2)^3, written as RREF rows joined by ';'.

# %%
print([str(s) for s in enumerate_subspaces(3, 2, 2)])

# %%
a = Subspace.from_string("100;010", 2)
b = Subspace.from_string("100;001", 2)
print("meet:", intersect(a, b), " join:", sum_subspaces(a, b))

# %% [markdown]
# Every 2-dim subspace of (Z_2)^4 has 2^(2*2) = 16 complements, and each line
# lies in 7 hyperplanes.

# %%
s = enumerate_subspaces(4, 2, 2)[5]
print(s, "->", len(complements_of(s)), "complements")
line = enumerate_subspaces(4, 1, 2)[0]
print(line, "->", len(superspaces_containing(line, 3)), "3-dim superspaces")
