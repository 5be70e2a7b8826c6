"""Booleans: T, F, conjunction and a value-polymorphic conditional."""
from __future__ import annotations

from typing import Any, Generic

from ..net import Agent, BoolTy, Neg, Net, Pos, V, discard, new_name, symbol
from ..rules import Engine, RuleSet


@symbol
class T(Agent[BoolTy, Pos]):
    def ground(self, force: Any) -> bool:
        return True


@symbol
class F(Agent[BoolTy, Pos]):
    def ground(self, force: Any) -> bool:
        return False


@symbol
class And(Agent[BoolTy, Neg]):
    """Principal port takes the first operand."""

    result: Agent[BoolTy, Neg]
    second: Agent[BoolTy, Pos]


@symbol
class If(Agent[BoolTy, Neg], Generic[V]):
    """Routes ``then`` or ``else_`` to ``result``; the branches may have any value type."""

    result: Agent[V, Neg]
    then: Agent[V, Pos]
    else_: Agent[V, Pos]


RULES = RuleSet("booleans", [T, F, And, If])


@RULES.rule(T, And)
def _t_and(t: T, a: And, net: Engine) -> None:
    net.interact(a.second, a.result)


@RULES.rule(F, And)
def _f_and(f: F, a: And, net: Engine) -> None:
    discard(a.second)
    net.interact(f, a.result)


@RULES.rule(T, If)
def _t_if(t: T, i: If, net: Engine) -> None:
    discard(i.else_)
    net.interact(i.then, i.result)


@RULES.rule(F, If)
def _f_if(f: F, i: If, net: Engine) -> None:
    discard(i.then)
    net.interact(i.else_, i.result)


RULES.seal()


def boolean(x: bool) -> T | F:
    return T() if x else F()


def build_and(x: bool, y: bool) -> Net:
    root, out = new_name(BoolTy)
    return Net([(boolean(x), And(out, boolean(y)))], [root])
