"""Optimal graph colourings with full rainbow paths.

The usual entry points::

    from rainbow_paths import cycle, theorem1, verify_rainbow

    res = theorem1(cycle(7))
    res.coloring.colors          # a 3-colouring
    res.report.all_lie_on        # True
"""

from .coloring import (
    CircularColoring,
    CircularNumber,
    KColoring,
    chromatic_number,
    chromatic_witness,
    circular_chromatic_number,
    circular_witness,
    enumerate_proper_colorings,
    find_theorem5_coloring,
    is_valid_circular,
)
from .constructions import theorem1, theorem2, theorem3, theorem4
from .errors import (
    BudgetExceeded,
    HypothesisError,
    ParseError,
    RainbowError,
    SearchExhausted,
    VerificationError,
)
from .graph import (
    Graph,
    Orientation,
    PathWitness,
    complete,
    connected_components,
    cycle,
    find_cycle_of_length,
    generate,
    mycielski,
    parse_dimacs,
    parse_edge_list,
    path,
    petersen,
    random_gnp,
    wheel,
    write_dimacs,
)
from .rainbow import (
    RainbowReport,
    backward_set,
    build_successor_digraph,
    forward_set,
    is_acyclic,
    shift_down,
    shift_up,
    verify_directed_rainbow,
    verify_rainbow,
    walk_depth_ok,
)

__version__ = "0.1.0"
