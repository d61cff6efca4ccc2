# The seven-cycle
#
# Counting over all proper 3-colourings shows that C7 has none in which
# every vertex begins a full rainbow path, while C5 only has such colourings.

from rainbow_paths import cycle, enumerate_proper_colorings, verify_rainbow
from rainbow_paths.harness import confirm_c7_exception

for n in (5, 7, 9):
    g = cycle(n)
    total = begins = lies = 0
    for f in enumerate_proper_colorings(g, 3):
        rep = verify_rainbow(g, f)
        total += 1
        begins += rep.all_begin
        lies += rep.all_lie_on
    print(f"C{n}: {total} colourings, {begins} begin everywhere, {lies} lie on everywhere")

# Why C7 fails: some vertex always sits in the middle of its only rainbow path
f = next(iter(enumerate_proper_colorings(cycle(7), 3)))
rep = verify_rainbow(cycle(7), f)
print(f.colors, rep.begins, rep.longest_from)

print(confirm_c7_exception()["confirmed"])
