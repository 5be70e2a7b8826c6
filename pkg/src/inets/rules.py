"""Rule sets, rule dispatch and the parallel reduction engine.

A RuleSet maps a (positive symbol, negative symbol) pair to an ordered list
of arms.  Guarded arms come first; the last arm of every pair must be
unguarded.  ``seal()`` checks that every well-typed pair of the registered
symbols has arms, so in static mode dispatch needs no catch-all.

Rule bodies have the signature ``body(pos, neg, engine)`` and create new
active pairs with ``engine.interact``.  The same bodies drive both the
parallel engine here and the sequential evaluator in ``inets.reference``.
"""
from __future__ import annotations

import threading
from collections import defaultdict
from functools import partial
from typing import Any, Callable, Iterable, NamedTuple

from . import scheduler
from .net import (
    V,
    Agent,
    NameNeg,
    NamePos,
    Neg,
    Net,
    NetError,
    Pos,
    check_pair,
    dynamic_checks,
    port_type,
    read_back,
)

NAME_POS = "NamePos"
NAME_NEG = "NameNeg"

DEFAULT_INLINE_BUDGET = 512

Symbol = type[Agent[Any, Any]]
Guard = Callable[[Any, Any], bool]
Body = Callable[[Any, Any, "Engine"], None]


class MissingRule(NetError):
    pass


class RuleDefinitionError(NetError):
    pass


class Arm(NamedTuple):
    label: str
    guard: Guard | None
    body: Body


class RuleSet:
    def __init__(self, name: str, symbols: Iterable[Symbol] = ()):
        self.name = name
        self.symbols: list[Symbol] = []
        self.arms: dict[tuple[Symbol, Symbol], list[Arm]] = {}
        self.sealed = False
        self.add_symbols(*symbols)

    def __repr__(self) -> str:
        return f"RuleSet({self.name!r}, {len(self.symbols)} symbols, {len(self.arms)} pairs)"

    def add_symbols(self, *symbols: Symbol) -> None:
        for s in symbols:
            if s in (NamePos, NameNeg):
                raise RuleDefinitionError("name agents are built in")
            if s not in self.symbols:
                self.symbols.append(s)

    def rule(
        self,
        pos: Symbol,
        neg: Symbol,
        *,
        when: Guard | None = None,
        case: str | None = None,
    ) -> Callable[[Body], Body]:
        """Register an arm for ``pos -><- neg``.  Arms are tried in registration order."""
        pv, pp = pos.signature.principal.value, pos.signature.principal.polarity
        nv, np_ = neg.signature.principal.value, neg.signature.principal.polarity
        if pp is not Pos or np_ is not Neg:
            raise RuleDefinitionError(f"{pos.__name__} -><- {neg.__name__}: need a positive and a negative symbol")
        if pv is not nv:
            raise RuleDefinitionError(f"{pos.__name__} -><- {neg.__name__}: value types differ")
        if when is not None and case is None:
            raise RuleDefinitionError("guarded arms need a case name")
        label = f"{pos.__name__}><{neg.__name__}" + (f"[{case}]" if case else "")

        def register(body: Body) -> Body:
            if self.sealed:
                raise RuleDefinitionError(f"{self.name} is sealed")
            arms = self.arms.setdefault((pos, neg), [])
            if arms and arms[-1].guard is None:
                # Same complaint as an unused match case.
                raise RuleDefinitionError(f"{label} is unreachable: {arms[-1].label} already matches every pair")
            if any(a.label == label for a in arms):
                raise RuleDefinitionError(f"duplicate arm {label}")
            arms.append(Arm(label, when, body))
            self.add_symbols(pos, neg)
            return body

        return register

    def well_typed_pairs(self) -> list[tuple[Symbol, Symbol]]:
        positives = [s for s in self.symbols if s.signature.principal.polarity is Pos]
        negatives = [s for s in self.symbols if s.signature.principal.polarity is Neg]
        return [
            (p, n)
            for p in positives
            for n in negatives
            if p.signature.principal.value is n.signature.principal.value
        ]

    def missing(self) -> list[tuple[Symbol, Symbol]]:
        """Well-typed pairs with no arm, or whose arms all carry guards."""
        out = []
        for pair in self.well_typed_pairs():
            arms = self.arms.get(pair)
            if not arms or arms[-1].guard is not None:
                out.append(pair)
        return out

    def seal(self) -> RuleSet:
        missing = self.missing()
        if missing:
            names = ", ".join(f"{p.__name__} -><- {n.__name__}" for p, n in missing)
            raise RuleDefinitionError(f"{self.name}: no rule for {names}")
        self.sealed = True
        return self

    def labels(self) -> list[str]:
        return sorted([a.label for arms in self.arms.values() for a in arms] + [NAME_POS, NAME_NEG])

    @classmethod
    def union(cls, name: str, *parts: RuleSet) -> RuleSet:
        out = cls(name)
        for part in parts:
            out.add_symbols(*part.symbols)
            for key, arms in part.arms.items():
                if key in out.arms:
                    raise RuleDefinitionError(f"{key[0].__name__} -><- {key[1].__name__} defined twice")
                out.arms[key] = list(arms)
        return out


class InteractionStats:
    """Per-arm firing counts."""

    def __init__(self, counts: dict[str, int] | None = None):
        self.counts: dict[str, int] = {k: v for k, v in (counts or {}).items() if v}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InteractionStats):
            return NotImplemented
        return self.counts == other.counts

    def __getitem__(self, label: str) -> int:
        return self.counts.get(label, 0)

    def __repr__(self) -> str:
        return f"InteractionStats({dict(sorted(self.counts.items()))})"

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def dump(self) -> str:
        """``label<TAB>count`` lines sorted by label."""
        return "".join(f"{k}\t{v}\n" for k, v in sorted(self.counts.items()))

    @classmethod
    def parse(cls, text: str) -> InteractionStats:
        counts = {}
        for line in text.splitlines():
            if line:
                k, v = line.split("\t")
                counts[k] = int(v)
        return cls(counts)


class Engine:
    """Shared dispatch.  Subclasses decide how ``interact`` and ``await_`` schedule work."""

    def __init__(self, rules: RuleSet, checked: bool | None = None):
        if not rules.sealed:
            raise RuleDefinitionError(f"{rules.name} must be sealed before use")
        self.rules = rules
        self.checked = dynamic_checks() if checked is None else checked
        self._arms = rules.arms
        self._tls = threading.local()
        self._counters: list[defaultdict[str, int]] = []
        self._counters_lock = threading.Lock()

    def interact(self, a1: Agent[V, Pos], a2: Agent[V, Neg]) -> None:
        raise NotImplementedError

    def await_(self, p: scheduler.Promise[Any], k: Callable[[Any], Any]) -> None:
        raise NotImplementedError

    def _counter(self) -> defaultdict[str, int]:
        try:
            return self._tls.counts  # type: ignore[no-any-return]
        except AttributeError:
            c: defaultdict[str, int] = defaultdict(int)
            self._tls.counts = c
            with self._counters_lock:
                self._counters.append(c)
            return c

    @property
    def stats(self) -> InteractionStats:
        """Summed counts.  Only meaningful once reduction is quiescent."""
        total: defaultdict[str, int] = defaultdict(int)
        with self._counters_lock:
            for c in self._counters:
                for k, v in list(c.items()):
                    total[k] += v
        return InteractionStats(total)

    def apply_rule(self, a1: Agent[V, Pos], a2: Agent[V, Neg]) -> None:
        if self.checked:
            self._apply_checked(a1, a2)
            return
        t1 = type(a1)
        if t1 is NamePos:
            self._counter()[NAME_POS] += 1
            self.await_(a1.promise, partial(self._forward, a2))  # type: ignore[attr-defined]
            return
        t2 = type(a2)
        if t2 is NameNeg:
            self._counter()[NAME_NEG] += 1
            scheduler.resolve(a2.resolver, a1)  # type: ignore[attr-defined]
            return
        for label, guard, body in self._arms[(t1, t2)]:
            if guard is None or guard(a1, a2):
                self._counter()[label] += 1
                body(a1, a2, self)
                return

    def _forward(self, neg: Agent[Any, Neg], value: Agent[Any, Pos]) -> None:
        self.interact(value, neg)

    def _apply_checked(self, a1: Agent[Any, Any], a2: Agent[Any, Any]) -> None:
        # Both orientations are accepted; a reversed pair runs the same arm.
        if type(a1) is NamePos or type(a2) is NamePos:
            pname, other = (a1, a2) if type(a1) is NamePos else (a2, a1)
            self._counter()[NAME_POS] += 1
            self.await_(pname.promise, partial(self._forward_checked, other))  # type: ignore[union-attr]
            return
        if type(a1) is NameNeg or type(a2) is NameNeg:
            nname, other = (a2, a1) if type(a2) is NameNeg else (a1, a2)
            check_pair(other, nname)
            self._counter()[NAME_NEG] += 1
            scheduler.resolve(nname.resolver, other)  # type: ignore[union-attr]
            return
        check_pair(a1, a2)
        if port_type(a1)[1] is Neg:
            a1, a2 = a2, a1
        arms = self._arms.get((type(a1), type(a2)))
        if arms:
            for label, guard, body in arms:
                if guard is None or guard(a1, a2):
                    self._counter()[label] += 1
                    body(a1, a2, self)
                    return
        raise MissingRule(f"No rule for this pair: {a1!r} -><- {a2!r}")

    def _forward_checked(self, other: Agent[Any, Any], value: Agent[Any, Any]) -> None:
        check_pair(value, other)
        self.interact(value, other)


class ParallelEngine(Engine):
    """Reduces on a WorkerPool.

    ``interact`` normally submits the pair to the pool.  While the queue
    already holds at least one task per worker, a worker runs the pair
    inline instead, up to ``inline_budget`` nested levels.  Strong
    confluence makes the choice invisible in results and counts.
    """

    def __init__(
        self,
        pool: scheduler.WorkerPool,
        rules: RuleSet | None = None,
        *,
        inline_budget: int = DEFAULT_INLINE_BUDGET,
        checked: bool | None = None,
    ):
        super().__init__(default_rules() if rules is None else rules, checked)
        if inline_budget < 0:
            raise ValueError("inline_budget must be >= 0")
        self.pool = pool
        self.inline_budget = inline_budget
        self._submit = pool.submit
        # One inline level costs a handful of interpreter frames.
        scheduler.ensure_recursion_limit(8 * inline_budget + 2000)

    def interact(self, a1: Agent[V, Pos], a2: Agent[V, Neg]) -> None:
        if self.checked:
            check_pair(a1, a2)
        tls = self._tls
        depth = getattr(tls, "depth", 0)
        pool = self.pool
        if depth < self.inline_budget and pool.backlog() >= pool.worker_count and pool.owns_current_thread():
            tls.depth = depth + 1
            try:
                self.apply_rule(a1, a2)
            finally:
                tls.depth = depth
        else:
            self._submit(partial(self.apply_rule, a1, a2))

    def await_(self, p: scheduler.Promise[Any], k: Callable[[Any], Any]) -> None:
        scheduler.await_(p, k, self.pool)

    def _force(self, a: Agent[Any, Any]) -> Agent[Any, Any]:
        while type(a) is NamePos:
            a = scheduler.block(a.promise, self.pool)  # type: ignore[attr-defined]
        return a

    def run(self, net: Net, settle: bool = True) -> list[Any]:
        """Start every initial pair, block on the interface and read it back.

        With ``settle`` the call also waits for the pool to drain, so work
        on discarded subnets is finished and ``stats`` is complete.
        """
        for a1, a2 in net.pairs:
            self.interact(a1, a2)
        values = [read_back(name, self._force) for name in net.interface]
        if settle:
            self.pool.wait_idle()
        if self.pool.failure is not None:
            raise scheduler.PoolFailure(f"reduction aborted: {self.pool.failure!r}") from self.pool.failure
        return values


def default_rules() -> RuleSet:
    from .systems import RULES

    return RULES


def interact(a1: Agent[V, Pos], a2: Agent[V, Neg], engine: Engine) -> None:
    """The ``-><-`` operator."""
    engine.interact(a1, a2)


def normalize(
    net: Net,
    pool: scheduler.WorkerPool | None = None,
    rules: RuleSet | None = None,
    **engine_options: Any,
) -> list[Any]:
    """Reduce ``net`` on ``pool`` (a fresh default-sized pool if omitted) and read back its interface."""
    if pool is None:
        with scheduler.create_pool() as own:
            return ParallelEngine(own, rules, **engine_options).run(net)
    return ParallelEngine(pool, rules, **engine_options).run(net)
