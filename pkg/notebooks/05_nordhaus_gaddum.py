# %% [markdown]
# # Nordhaus-Gaddum sums
#
# For a pattern G with minimum degree delta, `chi_G(H) + chi_G(complement H)`
# is at most `ceil(n/delta) + 2`, and one less in several cases.  `ng_sum`
# evaluates every applicable claim and records the tightest.

# %%
from gfree import PatternSpec, check_refined_conditions, ng_sum, verify_corpus, witness_suite
from gfree.enumerate import enumerate_up_to
from gfree.named import complete, cycle

# %% [markdown]
# The sharpness witnesses, each meeting `ceil(n/delta) + 1` exactly.

# %%
for rec in witness_suite():
    print(f"{rec.pattern:6} n={rec.n:2}  {rec.chi} + {rec.chi_complement} = {rec.sum}  bound {rec.bound} ({rec.branch})")

# %%
rec = ng_sum(complete(5), PatternSpec.all_two_regular())
print([(c.name, c.bound, c.holds) for c in rec.claims])

# %% [markdown]
# When `G = K_{d+1}` and `n = k*d`, a 2d-subset condition lowers the bound to
# `k + 1`.

# %%
from gfree import Graph

g = Graph(9, list(cycle(6).edges()) + [(6, 7), (7, 8)])
rep = check_refined_conditions(g, 3, evaluate_sum=True)
print(rep.cond_ii, rep.cond_iii, rep.sum, rep.refined_bound, rep.holds)

# %% [markdown]
# An exhaustive audit over every graph on at most 5 vertices.

# %%
report = verify_corpus(enumerate_up_to(5), [PatternSpec.single(complete(3), label="K3"),
                                            PatternSpec.all_two_regular()])
print(report.summary())
