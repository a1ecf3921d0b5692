"""
Blossoms
========

An odd cycle found inside one search tree is shrunk to a single vertex. The
example below has two blossoms, {c,d,e,f,g} and {j,k,m}; after shrinking,
trees rooted at a and h meet and the path is expanded back through the
cycles.
"""

# %%
from priomatch import Graph, Matching
from priomatch.blossom import BlossomSearch
from priomatch.dot import search_to_dot

letters = "abcdefghijkm"
v = {c: k + 1 for k, c in enumerate(letters)}
edges = "ab bc cd cf de fg eg dg gk jk km jm ij hi hf".split()
favoured = set("acdefghjkm")
g = Graph(12, [(v[e[0]], v[e[1]]) for e in edges],
          [1 if c in favoured else 2 for c in letters])
m = Matching(g, [g.edge_index(v[e[0]], v[e[1]]) for e in "bc de fg km ij".split()])

# %%
# Grow the trees by hand, then process the remaining edges in a fixed order.
search = BlossomSearch(g, m, 1, seed_queue=False)
for e in ["ab", "cd", "cf", "hi", "jk", "hf", "gd", "gk", "eg", "jm"]:
    search.process(v[e[0]], v[e[1]])
for b in search.blossoms:
    print("blossom", b.id + 1, "base", letters[b.base - 1],
          "members", "".join(letters[x - 1] for x in search.blossom_members(b.id)))

# %%
path = search.run()
print("augmenting path:", "".join(letters[x - 1] for x in path.vertices))
print("through shrunken vertices:", path.shrunken)

# %%
# Graphviz source for the final forest (even +, odd -, blossoms as clusters).
print(search_to_dot(search)[:300], "...")
