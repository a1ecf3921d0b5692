"""
Running time on random graphs
=============================

Each search is near-linear in m and there are at most n/2 augmentations
plus one failed search per priority class, so a solve is O(mn). With
m = 5n that is quadratic in n.
"""

# %%
from priomatch.bench import doubling_ratios, fitted_exponent, run_bench

records = run_bench([250, 500, 1000, 2000], seed=1, density=5)
for r in records:
    print(f"n={r.n:5d}  m={r.m:6d}  {r.elapsed:7.3f}s  searches={r.searches}")

# %%
print("doubling ratios:", [round(x, 2) for x in doubling_ratios(records)])
print("log-log slope  :", round(fitted_exponent(records), 2))
