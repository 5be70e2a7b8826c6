"""Attributed integers: parity test, two-stage addition and Fibonacci."""
from __future__ import annotations

from typing import Any

from ..net import Agent, BoolTy, IntTy, Neg, Net, Pos, new_name, symbol
from ..rules import Engine, RuleSet
from .booleans import F, T

DEFAULT_CUTOFF = 20


@symbol
class Int(Agent[IntTy, Pos]):
    value: int

    def ground(self, force: Any) -> int:
        return self.value


@symbol
class IsEven(Agent[IntTy, Neg]):
    result: Agent[BoolTy, Neg]


@symbol
class AddStage1(Agent[IntTy, Neg]):
    """Waits for the first addend; ``second`` delivers the other one."""

    result: Agent[IntTy, Neg]
    second: Agent[IntTy, Pos]


@symbol
class AddStage2(Agent[IntTy, Neg]):
    addend: int
    result: Agent[IntTy, Neg]


@symbol
class Fib(Agent[IntTy, Neg]):
    """fib of the Int plugged into the principal port.

    Arguments up to ``cutoff`` are computed sequentially instead of being
    unfolded into the net.
    """

    cutoff: int
    result: Agent[IntTy, Neg]


def fib_sequential(n: int) -> int:
    # Plain doubly recursive fib: the same work the net does, minus the net.
    if n < 2:
        return n
    return fib_sequential(n - 1) + fib_sequential(n - 2)


RULES = RuleSet("arith", [Int, IsEven, AddStage1, AddStage2, Fib])


# Guarded arm first; the fall-through must never see an even number.
@RULES.rule(Int, IsEven, when=lambda i, e: i.value % 2 == 0, case="even")
def _int_iseven_even(i: Int, e: IsEven, net: Engine) -> None:
    net.interact(T(), e.result)


@RULES.rule(Int, IsEven)
def _int_iseven(i: Int, e: IsEven, net: Engine) -> None:
    net.interact(F(), e.result)


@RULES.rule(Int, AddStage1)
def _int_add1(i: Int, a: AddStage1, net: Engine) -> None:
    net.interact(a.second, AddStage2(i.value, a.result))


@RULES.rule(Int, AddStage2)
def _int_add2(i: Int, a: AddStage2, net: Engine) -> None:
    net.interact(Int(a.addend + i.value), a.result)


@RULES.rule(Int, Fib, when=lambda i, f: i.value < 2, case="base")
def _int_fib_base(i: Int, f: Fib, net: Engine) -> None:
    net.interact(i, f.result)


@RULES.rule(Int, Fib, when=lambda i, f: i.value <= f.cutoff, case="seq")
def _int_fib_seq(i: Int, f: Fib, net: Engine) -> None:
    net.interact(Int(fib_sequential(i.value)), f.result)


@RULES.rule(Int, Fib)
def _int_fib(i: Int, f: Fib, net: Engine) -> None:
    n = i.value
    a_out, a_in = new_name(IntTy)
    b_out, b_in = new_name(IntTy)
    net.interact(Int(n - 1), Fib(f.cutoff, a_in))
    net.interact(Int(n - 2), Fib(f.cutoff, b_in))
    net.interact(a_out, AddStage1(f.result, b_out))


RULES.seal()


def build_is_even(n: int) -> Net:
    root, out = new_name(BoolTy)
    return Net([(Int(n), IsEven(out))], [root])


def build_add(x: int, y: int) -> Net:
    root, out = new_name(IntTy)
    return Net([(Int(x), AddStage1(out, Int(y)))], [root])


def build_fib(n: int, cutoff: int = DEFAULT_CUTOFF) -> Net:
    if n < 0:
        raise ValueError(f"fib is undefined for negative n={n}")
    root, out = new_name(IntTy)
    return Net([(Int(n), Fib(cutoff, out))], [root])
