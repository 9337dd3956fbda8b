# %% [markdown]
# # Quasi-uniform codes from subgroups
#
# Symbol i of the codeword for g is the coset g + G_i. Cosets get canonical
# labels: reduce g by the basis of G_i and read the free coordinates in base p.

# %%
from qubatch import Subspace, SubgroupSystem, build_code
from qubatch.oracle import brute_min_distance, check_quasi_uniform

# %% [markdown]
# Four lines of Z_3 x Z_3. Every pair meets trivially, so any two symbols
# determine g.

# %%
lines = [Subspace.from_string(t, 3) for t in ("10", "01", "11", "12")]
z3 = build_code(SubgroupSystem.of(lines))
for g, word in z3.code_table():
    print(g, word)
print("minimum distance", z3.minimum_distance(), "(brute force:", brute_min_distance(z3), ")")

# %% [markdown]
# Decoding intersects the cosets named by the symbols.

# %%
word = (1, 2, 2, 0)
for i, label in enumerate(word):
    print(lines[i], sorted(z3.coset_preimage(i, label)))
print("decoded:", z3.decode_full(word))
print("from positions 1 and 3 only:", z3.decode_subset(word, (1, 3)))

# %% [markdown]
# The seven lines of (Z_2)^3 give a length-7 code over 4-letter alphabets.

# %%
gens = ("100", "010", "001", "101", "110", "011", "111")
z2 = build_code(SubgroupSystem.of([Subspace.from_string(t, 2) for t in gens]))
for g, word in z2.code_table():
    print(g, " ".join(z2.format_symbol(i, x) for i, x in enumerate(word)))

# %%
reports = check_quasi_uniform(z2, 3)
print(len(reports), "subsets checked, all uniform:", all(r.ok for r in reports))
