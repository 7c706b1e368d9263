# %% [markdown]
# # Constructive upper bounds
#
# Three bounds are computed alongside the exact value:
#
# * degeneracy: `1 + ceil(D / delta)` via a greedy coloring in peel order
# * maximum degree: a Lovász-style decomposition into parts of bounded degree
# * chromatic: `ceil(chi(H) / (chi(G) - 1))`, reported but not relied on

# %%
import random

from gfree import DegreeBounds, Graph, PatternSpec, bound_report, lovasz_decomposition
from gfree.named import complete, petersen

# %%
K4 = PatternSpec.single(complete(4), label="K4")
for g in [complete(7), petersen()]:
    print(g.name, bound_report(g, K4).as_dict())

# %% [markdown]
# The decomposition moves one offending vertex at a time.  The potential
# `sum(e(V_i) - d_i |V_i|)` drops on every move, which is why it stops.

# %%
rng = random.Random(3)
n = 16
g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
# uneven targets: a third class that must be independent
bounds = DegreeBounds([g.max_degree // 2, g.max_degree - g.max_degree // 2 - 1, 0])
dec = lovasz_decomposition(g, bounds)
print("targets", list(bounds), "achieved", dec.class_max_degrees(g))
print("potential trace", dec.potentials)
