"""
Two priority classes on a bipartite graph
=========================================

With two classes the problem reads: find a maximum-size matching that covers
as many vertices of a favoured set S as possible. On bipartite graphs a plain
alternating-tree search is enough.
"""

# %%
import random

from priomatch import Matching, bipartite_augmenting_path, two_priority_matching
from priomatch.io import random_bipartite
from priomatch.paths import augment

rng = random.Random(4)
g = random_bipartite(12, 0.35, rng, [1] * 12)
print(g, "edges:", g.edges)

# %%
# Favour every vertex of maximum degree. Such a set can always be covered.
top = max(g.degree(u) for u in g.vertices())
s = {u for u in g.vertices() if g.degree(u) == top}
print("favoured:", sorted(s))

# %%
# Grow the matching one augmenting path at a time.
m = Matching(g)
while (path := bipartite_augmenting_path(g, m, s)) is not None:
    print(f"{path.case:9s}", path.vertices)
    augment(m, path)
print("all favoured matched:", all(m.is_matched(u) for u in s))

# %%
# The general solver gives a matching with the same coverage, and maximum size.
rep = two_priority_matching(g, s)
print("score:", rep.score.digits[:2], "size:", rep.size)
