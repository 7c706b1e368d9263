# %% [markdown]
# # Critical subgraphs with certificates
#
# A graph is critical when deleting any vertex or edge lowers its G-free
# chromatic number.  `extract_critical` shrinks a host down to such a
# subgraph and keeps a smaller coloring for every deletion as evidence.

# %%
from gfree import PatternSpec, extract_critical, is_critical
from gfree.critical import certify
from gfree.named import clique_plus_independent, complete, cycle, petersen

# %%
K4 = PatternSpec.single(complete(4), label="K4")
cert = extract_critical(clique_plus_independent(6, 4), K4)
print("k =", cert.k, "vertices", cert.vertices, "edges", len(cert.edges))
print("minimum degree", cert.min_degree, "needed", K4.delta * (cert.k - 1), cert.mindeg_check)

# %% [markdown]
# The evidence can be checked again from scratch.

# %%
print(is_critical(cert.graph, K4))
certify(clique_plus_independent(6, 4), cert.vertices, cert.edges, K4)

# %%
C5 = PatternSpec.single(cycle(5), label="C5")
c = extract_critical(petersen(), C5)
print("Petersen, C5-free:", c.k, "classes;", len(c.vertices), "vertices kept")
