# Circular colourings and the rounding step
#
# An (n, d)-colouring puts colours 1..n around a cycle and asks adjacent
# vertices to sit at circular distance at least d.  Rounding each value up
# after dividing by d gives an ordinary colouring with ceil(n/d) colours.

from rainbow_paths import (
    chromatic_number,
    circular_chromatic_number,
    circular_witness,
    cycle,
    is_valid_circular,
    mycielski,
    petersen,
)

for name, g in [("C5", cycle(5)), ("C7", cycle(7)), ("C9", cycle(9)), ("Petersen", petersen()), ("Grotzsch", mycielski(cycle(5)))]:
    cn = circular_chromatic_number(g)
    print(f"{name:9s} chi = {chromatic_number(g)}   chi_c = {cn}  ({float(cn.value):.3f})")

# The witness behind C7's value 7/3
c = circular_witness(cycle(7))
print(c.values, is_valid_circular(cycle(7), c))

# Rounding: ceil(c / 3) uses 3 colours and is proper
f = c.to_kcoloring()
print(f.colors, f.k, f.is_proper(cycle(7)))

# Rotating every value by the same amount keeps the colouring valid
print([c.rotated(s).values for s in range(3)])
