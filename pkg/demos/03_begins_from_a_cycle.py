# Starting a full rainbow path at every vertex
#
# With a cycle of length chi, theorem3 first stretches a rainbow run along
# that cycle until the successor digraph (u -> v when v's colour is u's plus
# one) gets a directed cycle, then shifts the rest onto it.

from rainbow_paths import build_successor_digraph, complete, theorem3, verify_rainbow, wheel

g = wheel(5)  # rim 0..4, hub 5; chi = 4
res = theorem3(g)
print("chi-cycle      :", res.cycle.vertices)
print("run lengths    :", res.path_lengths)
print("shifts         :", res.shifts, "stage:", res.stage)
print("colouring      :", res.coloring.colors)

dg = build_successor_digraph(g, res.coloring)
print("successor arcs :", sorted(dg.arcs))

rep = verify_rainbow(g, res.coloring)
for v in g.vertices():
    print(v, rep.begins[v], rep.witnesses[v].vertices)

# Cliques are the easy case
print(theorem3(complete(5)).coloring.colors)
