"""Interaction nets with typed agents, reduced on a worker pool."""
from .net import (
    Agent,
    BoolTy,
    IntListTy,
    IntTy,
    NameNeg,
    NamePos,
    Neg,
    Net,
    NetTypeError,
    Pos,
    StuckNet,
    checking,
    checking_mode,
    new_name,
    read_back,
    set_checking,
    symbol,
)
from .rules import Engine, InteractionStats, MissingRule, ParallelEngine, RuleSet, interact, normalize
from .scheduler import WorkerPool, block, create_pool, make_future, resolve, run_async

__version__ = "0.1.0"

__all__ = [
    "Agent", "BoolTy", "IntListTy", "IntTy", "NameNeg", "NamePos", "Neg", "Net", "NetTypeError", "Pos",
    "StuckNet", "checking", "checking_mode", "new_name", "read_back", "set_checking", "symbol",
    "Engine", "InteractionStats", "MissingRule", "ParallelEngine", "RuleSet", "interact", "normalize",
    "WorkerPool", "block", "create_pool", "make_future", "resolve", "run_async",
]
