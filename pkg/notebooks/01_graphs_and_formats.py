# %% [markdown]
# # Graphs, named constructions and interchange formats
#
# Graphs are stored as one adjacency bitmask per vertex.  Everything here is
# plain Python; `networkx` is not needed.

# %%
from gfree import Graph, construct_named, encode_graph6, parse_dimacs, parse_graph6
from gfree.graph import degeneracy, join
from gfree.named import complete, empty, petersen

# %% [markdown]
# Named graphs use a small descriptor language, which the CLI shares.

# %%
for name in ["K5", "C7", "P4", "K4,4", "K6+4K1", "K6-C6", "Petersen"]:
    g = construct_named(name)
    print(f"{name:9} n={g.n:2} m={g.m:2} max degree {g.max_degree}  degeneracy {degeneracy(g).value}")

# %% [markdown]
# A join of a clique and an independent set is the kind of host graph the
# sharpness examples are built from.

# %%
h = join(complete(3), empty(3))
print(h.m, "edges;", "complement is", encode_graph6(h.complement()))

# %% [markdown]
# graph6 round trip, and a DIMACS file for the same five-cycle.

# %%
s = encode_graph6(petersen())
print(s, parse_graph6(s) == petersen())

c5 = parse_dimacs("c five cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n")
print(sorted(c5.edges()), encode_graph6(c5))

# %% [markdown]
# Malformed input reports where parsing stopped.

# %%
try:
    parse_graph6("D??")
except ValueError as exc:
    print(exc)

# %%
print(list(Graph(4, [(0, 1), (1, 2)]).induced_subgraph([1, 2, 3]).edges()))
