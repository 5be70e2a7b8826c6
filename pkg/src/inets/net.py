"""Typed agents.

Every symbol of an interaction system is one frozen dataclass deriving
from ``Agent[V, P]``.  ``V`` is a value-type tag and ``P`` a polarity tag;
both are phantom parameters that exist only for the type checker.  A
constructed agent stands for its principal port.  Its agent-typed fields
are the auxiliary ports, each holding whatever agent is plugged into that
port; every other field is a scalar attribute.

Polarity inversion
------------------
An auxiliary field is annotated with the type of the agent *connected* to
the port, not with the port's own polarity.  Input ports (negative in the
usual drawing) therefore hold positive agents and vice versa::

    And : principal (bool, neg); aux result (bool, +), second (bool, -)
    ->  And(result: Agent[BoolTy, Neg], second: Agent[BoolTy, Pos])

Getting this backwards type-checks the wrong nets, so every symbol
definition in ``inets.systems`` follows the stored-agent convention.

Checking modes
--------------
``static``  tags are erased; mypy rejects ill-typed constructions and
            active pairs (see tests/typecheck).  No runtime cost.
``dynamic`` each construction and each ``interact`` verifies polarity and
            value type against the symbol signatures and raises NetTypeError.

The mode defaults to ``static`` and can be set with ``INET_CHECKS=dynamic``
or ``set_checking``.
"""
from __future__ import annotations

import contextlib
import os
import typing
from dataclasses import dataclass, fields
from enum import Enum
from typing import Any, Callable, ClassVar, Generic, Iterator, TypeVar

from typing_extensions import dataclass_transform

from .scheduler import Promise, Resolver, block, make_future


class Pos(Enum):
    """Positive polarity (outputs).  Uninhabited."""


class Neg(Enum):
    """Negative polarity (inputs).  Uninhabited."""


class IntTy(Enum):
    pass


class BoolTy(Enum):
    pass


class IntListTy(Enum):
    pass


V = TypeVar("V")
P = TypeVar("P")
A = TypeVar("A", bound=type)


class NetError(Exception):
    pass


class NetTypeError(NetError, TypeError):
    """Ill-typed construction or active pair (dynamic mode)."""


class StuckNet(NetError):
    """Read-back met an agent that is not a value, or a name that never resolves."""


_dynamic = os.environ.get("INET_CHECKS", "static").strip().lower() == "dynamic"


def checking_mode() -> str:
    return "dynamic" if _dynamic else "static"


def set_checking(mode: str) -> None:
    global _dynamic
    if mode not in ("static", "dynamic"):
        raise ValueError(f"unknown checking mode {mode!r}")
    _dynamic = mode == "dynamic"


@contextlib.contextmanager
def checking(mode: str) -> Iterator[None]:
    old = checking_mode()
    set_checking(mode)
    try:
        yield
    finally:
        set_checking(old)


def dynamic_checks() -> bool:
    return _dynamic


@dataclass(frozen=True)
class PortType:
    """``value`` is a tag class, or a TypeVar for polymorphic ports."""

    value: Any
    polarity: type

    def __str__(self) -> str:
        v = getattr(self.value, "__name__", str(self.value))
        return f"({v}, {self.polarity.__name__})"


@dataclass(frozen=True)
class SymbolSignature:
    label: str
    principal: PortType
    aux: tuple[tuple[str, PortType], ...]
    attributes: tuple[tuple[str, str], ...]

    @property
    def arity(self) -> int:
        return len(self.aux)


class Agent(Generic[V, P]):
    """Principal port of an agent with value type ``V`` and polarity ``P``."""

    __slots__ = ()

    signature: ClassVar[SymbolSignature]
    # Set by @symbol, cached for the hot paths.
    _aux_names: ClassVar[tuple[str, ...]] = ()
    _attr_names: ClassVar[tuple[str, ...]] = ()

    def __post_init__(self) -> None:
        if _dynamic:
            check_construction(self)

    def ground(self, force: Callable[[Agent[Any, Any]], Agent[Any, Any]]) -> Any:
        """Observable value of a value agent; other agents are stuck."""
        raise StuckNet(f"{self!r} is not a value")

    def __repr__(self) -> str:
        cls = type(self)
        attrs = ",".join(repr(getattr(self, n)) for n in cls._attr_names)
        label = cls.__name__ + (f"[{attrs}]" if attrs else "")
        if cls._aux_names:
            label += "(" + ", ".join(type(getattr(self, n)).__name__ for n in cls._aux_names) + ")"
        return label


@dataclass_transform(frozen_default=True, eq_default=False)
def symbol(cls: A) -> A:
    """Declare an agent constructor: frozen, slotted, identity-compared."""
    out: Any = dataclass(frozen=True, slots=True, eq=False, repr=False)(cls)
    sig = _signature_of(out)
    out.signature = sig
    out._aux_names = tuple(n for n, _ in sig.aux)
    out._attr_names = tuple(n for n, _ in sig.attributes)
    return out  # type: ignore[no-any-return]


def _agent_base(cls: type) -> tuple[Any, Any]:
    for klass in cls.__mro__:
        for base in getattr(klass, "__orig_bases__", ()):
            if typing.get_origin(base) is Agent:
                v, p = typing.get_args(base)
                return v, p
    raise TypeError(f"{cls.__name__} does not derive from Agent[V, P]")


def _signature_of(cls: type) -> SymbolSignature:
    v, p = _agent_base(cls)
    hints = typing.get_type_hints(cls)
    aux = []
    attrs = []
    for f in fields(cls):
        hint = hints[f.name]
        origin = typing.get_origin(hint)
        if origin is Agent:
            fv, fp = typing.get_args(hint)
            aux.append((f.name, PortType(fv, fp)))
        elif isinstance(hint, type) and hint in (int, bool, float, str):
            attrs.append((f.name, hint.__name__))
        else:
            attrs.append((f.name, getattr(origin or hint, "__name__", str(hint))))
    return SymbolSignature(cls.__name__, PortType(v, p), tuple(aux), tuple(attrs))


@symbol
class NamePos(Agent[V, Pos]):
    """Positive end of a wire: stands for whatever the paired NameNeg receives."""

    promise: Promise[Agent[V, Pos]]
    ty: type | None = None


@symbol
class NameNeg(Agent[V, Neg]):
    """Negative end of a wire: interacting with a positive agent resolves it."""

    resolver: Resolver[Agent[V, Pos]]
    ty: type | None = None


# Name agents carry no attributes worth printing.
NamePos._attr_names = ()
NameNeg._attr_names = ()


@typing.overload
def new_name() -> tuple[NamePos[Any], NameNeg[Any]]: ...


@typing.overload
def new_name(ty: type[V]) -> tuple[NamePos[V], NameNeg[V]]: ...


def new_name(ty: type | None = None) -> tuple[NamePos[Any], NameNeg[Any]]:
    """A fresh wire: ``(positive end, negative end)``.

    Pass the value type to have both ends typed, statically and for the
    dynamic checks.  Without it the wire accepts any value type.
    """
    promise, resolver = make_future()
    return NamePos(promise, ty), NameNeg(resolver, ty)


def port_type(a: Agent[Any, Any]) -> tuple[Any, type]:
    """Runtime (value type, polarity) of an agent's principal port.

    The value type is None for untyped name agents.
    """
    principal = type(a).signature.principal
    v = principal.value
    if isinstance(v, TypeVar):
        v = getattr(a, "ty", None)
    return v, principal.polarity


def _unify(bindings: dict[TypeVar, Any], declared: Any, actual: Any) -> bool:
    if actual is None:
        return True
    if isinstance(declared, TypeVar):
        bound = bindings.setdefault(declared, actual)
        return bound is actual
    return declared is actual


def check_construction(a: Agent[Any, Any]) -> None:
    cls = type(a)
    sig = cls.signature
    bindings: dict[TypeVar, Any] = {}
    principal_v = sig.principal.value
    if isinstance(principal_v, TypeVar) and getattr(a, "ty", None) is not None:
        bindings[principal_v] = a.ty  # type: ignore[attr-defined]
    for name, declared in sig.aux:
        sub = getattr(a, name)
        if not isinstance(sub, Agent):
            raise NetTypeError(f"{sig.label}.{name}: expected an agent, got {sub!r}")
        v, pol = port_type(sub)
        if pol is not declared.polarity:
            raise NetTypeError(
                f"{sig.label}.{name}: expects a {declared} agent, got {sub!r} with polarity {pol.__name__}"
            )
        if not _unify(bindings, declared.value, v):
            raise NetTypeError(
                f"{sig.label}.{name}: expects a {declared} agent, got {sub!r} of type {v.__name__}"
            )


def check_pair(a1: Agent[Any, Any], a2: Agent[Any, Any]) -> None:
    """An active pair needs equal value types and opposite polarities."""
    v1, p1 = port_type(a1)
    v2, p2 = port_type(a2)
    if p1 is p2:
        raise NetTypeError(f"{a1!r} -><- {a2!r}: both ports are {p1.__name__}")
    if v1 is not None and v2 is not None and v1 is not v2:
        raise NetTypeError(f"{a1!r} -><- {a2!r}: value types {v1.__name__} and {v2.__name__} differ")


@dataclass
class Net:
    """Initial active pairs plus the interface names to observe."""

    pairs: list[tuple[Agent[Any, Pos], Agent[Any, Neg]]]
    interface: list[NamePos[Any]]


def force_blocking(a: Agent[Any, Any]) -> Agent[Any, Any]:
    while type(a) is NamePos:
        a = block(a.promise)
    return a


def force_now(a: Agent[Any, Any]) -> Agent[Any, Any]:
    """Follow resolved names without waiting; an empty name is a stuck net."""
    while type(a) is NamePos:
        if not a.promise.resolved:
            raise StuckNet("interface name never resolved")
        a = a.promise.peek()
    return a


def read_back(a: Agent[Any, Any], force: Callable[[Agent[Any, Any]], Agent[Any, Any]] = force_blocking) -> Any:
    """Observe the value rooted at ``a``, blocking on names as needed.

    Must run outside the pool.  ``force`` decides how names are followed;
    the sequential evaluator passes ``force_now``.
    """
    return force(a).ground(force)


def discard(a: Agent[Any, Any]) -> None:
    """Erase a subnet.

    The garbage collector reclaims everything reachable only from ``a``.
    A name inside it that never resolves simply leaves an unreferenced cell.
    """
    del a
