"""Independent baselines: plain oracles and a single-threaded evaluator.

``SequentialEngine`` runs the very same rule arms as the parallel engine.
It keeps pending active pairs in a FIFO and drains it on the calling
thread; a continuation parked on a name runs as soon as the name is
resolved.  The oracles share no code with the nets.
"""
from __future__ import annotations

import gc
from collections import deque
from typing import Any, Callable, Iterable, Sequence

from . import scheduler
from .net import V, Agent, Neg, Net, Pos, StuckNet, check_pair, force_now, read_back
from .rules import Engine, InteractionStats, RuleSet, default_rules


def fib_oracle(n: int) -> int:
    if n < 0:
        raise ValueError(f"fib is undefined for negative n={n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def sort_oracle(xs: Iterable[int]) -> list[int]:
    return sorted(xs)


class SequentialEngine(Engine):
    def __init__(self, rules: RuleSet | None = None, checked: bool | None = None):
        super().__init__(default_rules() if rules is None else rules, checked)
        self.queue: deque[tuple[Agent[Any, Pos], Agent[Any, Neg]]] = deque()
        self.fired = 0

    def interact(self, a1: Agent[V, Pos], a2: Agent[V, Neg]) -> None:
        if self.checked:
            check_pair(a1, a2)
        self.queue.append((a1, a2))

    def await_(self, p: scheduler.Promise[Any], k: Callable[[Any], Any]) -> None:
        scheduler.on_resolved(p, k)

    def drain(self) -> None:
        queue = self.queue
        apply = self.apply_rule
        # A FIFO frontier keeps a large acyclic heap alive; generational
        # collection passes over it only cost time.
        paused = gc.isenabled()
        gc.disable()
        try:
            while queue:
                a1, a2 = queue.popleft()
                self.fired += 1
                apply(a1, a2)
        finally:
            if paused:
                gc.enable()

    def run(self, net: Net, order: Sequence[int] | None = None) -> list[Any]:
        """Reduce to quiescence and read back the interface.

        ``order`` permutes the initial pairs before they are queued.
        """
        pairs = net.pairs if order is None else [net.pairs[i] for i in order]
        for a1, a2 in pairs:
            self.interact(a1, a2)
        self.drain()
        try:
            return [read_back(name, force_now) for name in net.interface]
        except StuckNet as exc:
            raise StuckNet(f"queue drained with the interface unresolved: {exc}") from exc


def reduce_sequential(
    net: Net,
    rules: RuleSet | None = None,
    order: Sequence[int] | None = None,
) -> tuple[list[Any], InteractionStats]:
    engine = SequentialEngine(rules)
    values = engine.run(net, order)
    return values, engine.stats
