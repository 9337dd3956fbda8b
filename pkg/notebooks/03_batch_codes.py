# %% [markdown]
# # Batch codes from matchings
#
# Two subgroups meeting only in 0 form a recovery pair: their two symbols
# decode the whole information vector. A matching in the trivial-intersection
# graph is a set of disjoint pairs, so it serves that many requests at once.

# %%
import random

from qubatch import (build_bipartite_graph, build_full_lattice_batch_code, build_halfdim_graph,
                     connected_components, degree_profile, edge_connectivity, find_triangle,
                     max_bipartite_matching, max_general_matching, repair_symbol, serve_request)
from qubatch.oracle import run_verification

# %% [markdown]
# Lines against planes in (Z_2)^4: an 8-regular bipartite graph with a perfect
# matching.

# %%
g = build_bipartite_graph(4, 1)
print(degree_profile(g), "matching", max_bipartite_matching(g).size)

# %% [markdown]
# The 35 planes of (Z_2)^4 form a 16-regular graph with triangles.

# %%
h = build_halfdim_graph(4)
print(degree_profile(h), "components", len(connected_components(h)),
      "triangle", find_triangle(h), "matching", max_general_matching(h).size,
      "edge connectivity", edge_connectivity(h))

# %% [markdown]
# All nontrivial subgroups together give the full-lattice codes.

# %%
for k in (3, 4, 5):
    bc = build_full_lattice_batch_code(k)
    print(k, bc.params.as_tuple(), "gap to 2t - 1:", bc.bound_gaps()[1])

# %%
bc = build_full_lattice_batch_code(4)
word = bc.code.encode("1011")
got = serve_request(bc, word, (3, 3, 1, 4))
print("values", got.values, "from pairs", got.pairs)

# %% [markdown]
# Repair: erase 32 symbols but leave one plan pair intact.

# %%
rng = random.Random(0x5EED)
keep = bc.plan.pairs[7]
erased = set(rng.sample([i for i in range(bc.code.n) if i not in keep], 32))
damaged = [0 if i in erased else x for i, x in enumerate(word)]
print(all(repair_symbol(bc, damaged, erased, e) == word[e] for e in erased))

# %%
report = run_verification(bc, 2, sample=True)
for check in report["checks"]:
    print("PASS" if check["passed"] else "FAIL", check["name"], check["detail"])
