# Every vertex on a full rainbow path
#
# A full rainbow path has one vertex of each of the k colours.  theorem1
# builds a chi-colouring in which every vertex lies on one, and keeps a
# trace of the repair it made class by class.

from rainbow_paths import cycle, theorem1, verify_rainbow

g = cycle(7)
res = theorem1(g)
tr = res.trace

print("circular start :", tr.base_circular.values)
print("rounded        :", tr.initial_f.colors)
print("final          :", res.coloring.colors)

# which vertices had to move to the top colour, by class index
print({i: sorted(x) for i, x in tr.recolored_sets.items() if x})

# The exact verifier is independent of the construction
rep = verify_rainbow(g, res.coloring)
print("lies on:", rep.lies_on)
for v, w in sorted(rep.witnesses.items()):
    print(v, "->", w.vertices, [res.coloring[u] for u in w.vertices])
