"""Integer lists with Quicksort and Mergesort.

Elements are Cons attributes, not linked Int agents.

Quicksort (pivot = head, ties go to the low side)::

    Nil      >< QS(r)          => Nil >< r
    Cons h t >< QS(r)          => t >< Part[h](lo, hi);  lo >< QS(slo);  hi >< QS(shi);
                                  slo >< App(r, Cons h shi)
    Nil      >< Part[p](lo,hi) => Nil >< lo;  Nil >< hi
    Cons x t >< Part[p](lo,hi) => x <= p:  Cons x n >< lo;  t >< Part[p](n, hi)
                                  x >  p:  Cons x n >< hi;  t >< Part[p](lo, n)
    Nil      >< App(r, s)      => s >< r
    Cons x t >< App(r, s)      => Cons x n >< r;  t >< App(n, s)

Mergesort (split by alternating positions)::

    Nil      >< MS(r)          => Nil >< r
    Cons h t >< MS(r)          => t >< MSHead[h](r)
    Nil      >< MSHead[h](r)   => Cons h Nil >< r
    Cons y t >< MSHead[h](r)   => Cons h (Cons y t) >< Split(a, b);  a >< MS(sa);  b >< MS(sb);
                                  sa >< Merge(r, sb)
    Nil      >< Split(a, b)    => Nil >< a;  Nil >< b
    Cons x t >< Split(a, b)    => Cons x n >< a;  t >< Split(b, n)
    Nil      >< Merge(r, o)    => o >< r
    Cons x t >< Merge(r, o)    => o >< MergeHead[x](r, t)
    Nil      >< MergeHead[x](r, t) => Cons x t >< r
    Cons y u >< MergeHead[x](r, t) => x <= y:  Cons x n >< r;  t >< Merge(n, Cons y u)
                                      x >  y:  Cons y n >< r;  u >< MergeHead[x](n, t)

Every ``n``, ``lo``, ``sa`` ... on a right-hand side is a fresh name pair.
"""
from __future__ import annotations

from typing import Any, Callable, Iterable

from ..net import Agent, IntListTy, Neg, Net, Pos, StuckNet, discard, force_blocking, new_name, symbol
from ..rules import Engine, RuleSet

L = IntListTy


@symbol
class Nil(Agent[IntListTy, Pos]):
    def ground(self, force: Any) -> list[int]:
        return []


@symbol
class Cons(Agent[IntListTy, Pos]):
    head: int
    tail: Agent[IntListTy, Pos]

    def ground(self, force: Callable[[Agent[Any, Any]], Agent[Any, Any]]) -> list[int]:
        out = []
        a: Agent[Any, Any] = self
        while type(a) is Cons:
            out.append(a.head)
            a = force(a.tail)
        if type(a) is not Nil:
            raise StuckNet(f"list ends in {a!r}")
        return out


@symbol
class QS(Agent[IntListTy, Neg]):
    result: Agent[IntListTy, Neg]


@symbol
class Part(Agent[IntListTy, Neg]):
    pivot: int
    lo: Agent[IntListTy, Neg]
    hi: Agent[IntListTy, Neg]


@symbol
class App(Agent[IntListTy, Neg]):
    """Appends ``suffix`` to the list at the principal port."""

    result: Agent[IntListTy, Neg]
    suffix: Agent[IntListTy, Pos]


@symbol
class MS(Agent[IntListTy, Neg]):
    result: Agent[IntListTy, Neg]


@symbol
class MSHead(Agent[IntListTy, Neg]):
    """Holds the first element while checking for a second one."""

    head: int
    result: Agent[IntListTy, Neg]


@symbol
class Split(Agent[IntListTy, Neg]):
    left: Agent[IntListTy, Neg]
    right: Agent[IntListTy, Neg]


@symbol
class Merge(Agent[IntListTy, Neg]):
    result: Agent[IntListTy, Neg]
    other: Agent[IntListTy, Pos]


@symbol
class MergeHead(Agent[IntListTy, Neg]):
    """Holds the head and tail of one merge input; the other arrives at the principal port."""

    head: int
    result: Agent[IntListTy, Neg]
    tail: Agent[IntListTy, Pos]


RULES = RuleSet("lists", [Nil, Cons, QS, Part, App, MS, MSHead, Split, Merge, MergeHead])
rule = RULES.rule


@rule(Nil, QS)
def _nil_qs(nil: Nil, q: QS, net: Engine) -> None:
    net.interact(nil, q.result)


@rule(Cons, QS)
def _cons_qs(c: Cons, q: QS, net: Engine) -> None:
    lo_out, lo_in = new_name(L)
    hi_out, hi_in = new_name(L)
    slo_out, slo_in = new_name(L)
    shi_out, shi_in = new_name(L)
    net.interact(c.tail, Part(c.head, lo_in, hi_in))
    net.interact(lo_out, QS(slo_in))
    net.interact(hi_out, QS(shi_in))
    net.interact(slo_out, App(q.result, Cons(c.head, shi_out)))


@rule(Nil, Part)
def _nil_part(nil: Nil, p: Part, net: Engine) -> None:
    net.interact(nil, p.lo)
    net.interact(Nil(), p.hi)


@rule(Cons, Part, when=lambda c, p: c.head <= p.pivot, case="lo")
def _cons_part_lo(c: Cons, p: Part, net: Engine) -> None:
    out, inp = new_name(L)
    net.interact(Cons(c.head, out), p.lo)
    net.interact(c.tail, Part(p.pivot, inp, p.hi))


@rule(Cons, Part)
def _cons_part_hi(c: Cons, p: Part, net: Engine) -> None:
    out, inp = new_name(L)
    net.interact(Cons(c.head, out), p.hi)
    net.interact(c.tail, Part(p.pivot, p.lo, inp))


@rule(Nil, App)
def _nil_app(nil: Nil, a: App, net: Engine) -> None:
    discard(nil)
    net.interact(a.suffix, a.result)


@rule(Cons, App)
def _cons_app(c: Cons, a: App, net: Engine) -> None:
    out, inp = new_name(L)
    net.interact(Cons(c.head, out), a.result)
    net.interact(c.tail, App(inp, a.suffix))


@rule(Nil, MS)
def _nil_ms(nil: Nil, m: MS, net: Engine) -> None:
    net.interact(nil, m.result)


@rule(Cons, MS)
def _cons_ms(c: Cons, m: MS, net: Engine) -> None:
    net.interact(c.tail, MSHead(c.head, m.result))


@rule(Nil, MSHead)
def _nil_mshead(nil: Nil, m: MSHead, net: Engine) -> None:
    net.interact(Cons(m.head, nil), m.result)


@rule(Cons, MSHead)
def _cons_mshead(c: Cons, m: MSHead, net: Engine) -> None:
    a_out, a_in = new_name(L)
    b_out, b_in = new_name(L)
    sa_out, sa_in = new_name(L)
    sb_out, sb_in = new_name(L)
    net.interact(Cons(m.head, c), Split(a_in, b_in))
    net.interact(a_out, MS(sa_in))
    net.interact(b_out, MS(sb_in))
    net.interact(sa_out, Merge(m.result, sb_out))


@rule(Nil, Split)
def _nil_split(nil: Nil, s: Split, net: Engine) -> None:
    net.interact(nil, s.left)
    net.interact(Nil(), s.right)


@rule(Cons, Split)
def _cons_split(c: Cons, s: Split, net: Engine) -> None:
    out, inp = new_name(L)
    net.interact(Cons(c.head, out), s.left)
    net.interact(c.tail, Split(s.right, inp))


@rule(Nil, Merge)
def _nil_merge(nil: Nil, m: Merge, net: Engine) -> None:
    discard(nil)
    net.interact(m.other, m.result)


@rule(Cons, Merge)
def _cons_merge(c: Cons, m: Merge, net: Engine) -> None:
    net.interact(m.other, MergeHead(c.head, m.result, c.tail))


@rule(Nil, MergeHead)
def _nil_mergehead(nil: Nil, m: MergeHead, net: Engine) -> None:
    discard(nil)
    net.interact(Cons(m.head, m.tail), m.result)


@rule(Cons, MergeHead, when=lambda c, m: m.head <= c.head, case="left")
def _cons_mergehead_left(c: Cons, m: MergeHead, net: Engine) -> None:
    out, inp = new_name(L)
    net.interact(Cons(m.head, out), m.result)
    net.interact(m.tail, Merge(inp, c))


@rule(Cons, MergeHead)
def _cons_mergehead_right(c: Cons, m: MergeHead, net: Engine) -> None:
    out, inp = new_name(L)
    net.interact(Cons(c.head, out), m.result)
    net.interact(c.tail, MergeHead(m.head, inp, m.tail))


RULES.seal()


def encode_list(xs: Iterable[int]) -> Agent[IntListTy, Pos]:
    a: Agent[IntListTy, Pos] = Nil()
    for x in reversed(list(xs)):
        a = Cons(x, a)
    return a


def decode_list(a: Agent[Any, Any], force: Callable[[Agent[Any, Any]], Agent[Any, Any]] | None = None) -> list[int]:
    """Inverse of encode_list.  Anything but a Nil-terminated Cons chain is stuck."""
    f = force_blocking if force is None else force
    a = f(a)
    if type(a) not in (Nil, Cons):
        raise StuckNet(f"{a!r} is not a list")
    return a.ground(f)  # type: ignore[no-any-return]


def build_quicksort(xs: Iterable[int]) -> Net:
    root, out = new_name(L)
    return Net([(encode_list(xs), QS(out))], [root])


def build_mergesort(xs: Iterable[int]) -> Net:
    root, out = new_name(L)
    return Net([(encode_list(xs), MS(out))], [root])
