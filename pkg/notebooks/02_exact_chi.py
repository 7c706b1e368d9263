# %% [markdown]
# # Exact G-free chromatic numbers
#
# `chi_g_exact` returns the smallest number of classes such that no class
# contains a copy of the pattern, together with a witness coloring.

# %%
from gfree import PatternSpec, chi_g_exact, contains_copy, find_copy
from gfree.named import complete, complete_bipartite, cycle, petersen

K3 = PatternSpec.single(complete(3), label="K3")
C5 = PatternSpec.single(cycle(5), label="C5")
CYCLES = PatternSpec.all_two_regular()

# %% [markdown]
# Pattern containment first.  Copies are ordinary (not necessarily induced)
# subgraphs unless `induced=True`.

# %%
print(find_copy(petersen(), C5))
print(contains_copy(complete(4), PatternSpec.single(cycle(4))),
      contains_copy(complete(4), PatternSpec.single(cycle(4), induced=True)))

# %% [markdown]
# Forbidding K2 is ordinary coloring; forbidding every 2-regular graph asks
# for a partition into forests (vertex arboricity).

# %%
for g in [complete(5), cycle(5), complete_bipartite(3, 3), petersen()]:
    row = []
    for pat in [PatternSpec.single(complete(2), label="K2"), K3, C5, CYCLES]:
        res = chi_g_exact(g, pat)
        assert res.witness.is_valid(g)
        row.append(f"{pat.name}:{res.value}")
    print(f"{g.name:10}", "  ".join(row))

# %%
res = chi_g_exact(petersen(), CYCLES)
print("forest classes of the Petersen graph:", res.witness.classes())
