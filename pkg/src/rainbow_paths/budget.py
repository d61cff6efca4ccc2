"""Wall-clock and node budgets for the exponential searches."""

import time

from .errors import BudgetExceeded


class Budget:
    """Cooperative budget checked from inside search loops.

    ``seconds=None`` and ``nodes=None`` mean unlimited.  Searches call
    :meth:`tick` once per expanded node.
    """

    __slots__ = ("deadline", "nodes_left", "_count")

    def __init__(self, seconds=None, nodes=None):
        self.deadline = None if seconds is None else time.monotonic() + seconds
        self.nodes_left = nodes
        self._count = 0

    def tick(self):
        if self.nodes_left is not None:
            self.nodes_left -= 1
            if self.nodes_left < 0:
                raise BudgetExceeded("node budget exhausted")
        self._count += 1
        # time.monotonic is comparatively slow, so sample it on the first
        # tick and then every 256th
        if self.deadline is not None and (self._count & 255) == 1:
            self.check()

    def check(self):
        if self.deadline is not None and time.monotonic() >= self.deadline:
            raise BudgetExceeded("time budget exhausted")


def tick(budget):
    if budget is not None:
        budget.tick()
