"""
Priority scores and the priority sweep
======================================

Each vertex has a priority class, 1 being the most important. A matching is
scored by counting matched vertices per class; scores compare digit by digit
from class 1 downwards.
"""

# %%
from priomatch import Graph, Matching, compare, i_score, max_priority_matching, priority_score

# A path 1-2-3-4 plus a pendant 5 on vertex 3. Vertices 1 and 5 are the
# important ones.
g = Graph(5, [(1, 2), (2, 3), (3, 4), (3, 5)], [1, 3, 2, 3, 1])

# %%
# Matching the middle edges covers four vertices but neither priority-1 vertex.
middle = Matching(g, [g.edge_index(2, 3)])
print("middle edge:", priority_score(g, middle))

# %%
# The sweep first matches as many priority-1 vertices as possible, then
# priority-2 ones, and so on.
report = max_priority_matching(g)
print("optimal    :", report.score, report.matching.pairs())
print("1-score    :", i_score(report.score, 1))
print("comparison :", compare(priority_score(g, middle), report.score).name)

# %%
# The optimum is also a maximum-size matching.
print("size       :", report.size)
