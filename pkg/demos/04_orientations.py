# Directed rainbow paths in oriented 3-chromatic graphs
#
# For any orientation of a 3-chromatic graph there is a proper 3-colouring
# with a directed path of three differently coloured vertices.

from collections import Counter

from rainbow_paths import Orientation, cycle, theorem4, verify_directed_rainbow
from rainbow_paths.graph import all_orientations

d = Orientation(cycle(5), [(0, 1), (2, 1), (2, 3), (4, 3), (4, 0)])
res = theorem4(d)
dec = res.decomposition
print("sources:", sorted(dec.sources), "sinks:", sorted(dec.sinks), "middle:", sorted(dec.middle))
print("case   :", dec.case_tag)
print("path   :", res.witness.vertices, [res.coloring[v] for v in res.witness.vertices])

# All 32 orientations of C5 and the case each one lands in
tags = Counter()
for d in all_orientations(cycle(5)):
    res = theorem4(d)
    assert verify_directed_rainbow(d, res.coloring)[0]
    tags[res.decomposition.case_tag] += 1
print(dict(tags))
