"""The shipped interaction systems and one-call evaluators for them.

Each evaluator builds its net, reduces it on ``pool`` (a fresh
default-sized pool when omitted) and reads the result back.
"""
from __future__ import annotations

from typing import Iterable

from ..rules import RuleSet, normalize
from ..scheduler import WorkerPool
from . import arith, booleans, lists
from .arith import DEFAULT_CUTOFF, AddStage1, AddStage2, Fib, Int, IsEven, build_add, build_fib, build_is_even
from .booleans import And, F, If, T, boolean, build_and
from .lists import (
    MS,
    QS,
    App,
    Cons,
    Merge,
    MergeHead,
    MSHead,
    Nil,
    Part,
    Split,
    build_mergesort,
    build_quicksort,
    decode_list,
    encode_list,
)

RULES = RuleSet.union("inets", booleans.RULES, arith.RULES, lists.RULES).seal()

SYSTEMS = {
    "booleans": booleans.RULES,
    "arith": arith.RULES,
    "lists": lists.RULES,
}


def eval_and(x: bool, y: bool, pool: WorkerPool | None = None) -> bool:
    (out,) = normalize(build_and(x, y), pool)
    return out  # type: ignore[no-any-return]


def is_even(n: int, pool: WorkerPool | None = None) -> bool:
    (out,) = normalize(build_is_even(n), pool)
    return out  # type: ignore[no-any-return]


def fib_net(n: int, pool: WorkerPool | None = None, cutoff: int = DEFAULT_CUTOFF) -> int:
    (out,) = normalize(build_fib(n, cutoff), pool)
    return out  # type: ignore[no-any-return]


def quicksort_net(xs: Iterable[int], pool: WorkerPool | None = None) -> list[int]:
    (out,) = normalize(build_quicksort(xs), pool)
    return out  # type: ignore[no-any-return]


def mergesort_net(xs: Iterable[int], pool: WorkerPool | None = None) -> list[int]:
    (out,) = normalize(build_mergesort(xs), pool)
    return out  # type: ignore[no-any-return]


__all__ = [
    "RULES", "SYSTEMS", "DEFAULT_CUTOFF",
    "T", "F", "And", "If", "Int", "IsEven", "AddStage1", "AddStage2", "Fib",
    "Nil", "Cons", "QS", "Part", "App", "MS", "MSHead", "Split", "Merge", "MergeHead",
    "boolean", "build_and", "build_is_even", "build_add", "build_fib", "build_quicksort", "build_mergesort",
    "encode_list", "decode_list",
    "eval_and", "is_even", "fib_net", "quicksort_net", "mergesort_net",
]
