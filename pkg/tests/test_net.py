import dataclasses
import threading

import pytest
from hypothesis import given, settings, strategies as st

from inets.net import (
    BoolTy,
    IntListTy,
    IntTy,
    Neg,
    NetTypeError,
    Pos,
    StuckNet,
    check_pair,
    force_now,
    new_name,
    port_type,
    read_back,
)
from inets.reference import reduce_sequential
from inets.scheduler import resolve
from inets.systems import (
    And,
    Cons,
    F,
    Fib,
    If,
    Int,
    IsEven,
    Nil,
    Part,
    T,
    build_and,
    build_fib,
    build_quicksort,
)
from inets.rules import normalize

from helpers import rewire_net


def test_polarity_tags_are_uninhabited():
    for tag in (Pos, Neg):
        with pytest.raises(TypeError):
            tag()
        assert list(tag) == []
    assert Pos is not Neg


def test_signatures_match_declarations():
    sig = And.signature
    assert sig.arity == 2
    assert (sig.principal.value, sig.principal.polarity) == (BoolTy, Neg)
    assert [(n, p.value, p.polarity) for n, p in sig.aux] == [
        ("result", BoolTy, Neg),
        ("second", BoolTy, Pos),
    ]
    assert Int.signature.arity == 0 and Int.signature.attributes == (("value", "int"),)
    assert IsEven.signature.aux[0][1].value is BoolTy
    assert Part.signature.attributes == (("pivot", "int"),)
    assert Part.signature.arity == 2
    for s in (T, F, Int, Nil, Cons, And, IsEven, Fib, Part):
        assert s.signature.arity == len(s.signature.aux)


def test_arity_is_structural():
    r, rn = new_name(BoolTy)
    with pytest.raises(TypeError):
        And(rn)
    with pytest.raises(TypeError):
        And(rn, T(), T())
    with pytest.raises(TypeError):
        T(F())


def test_agents_are_immutable():
    with pytest.raises(dataclasses.FrozenInstanceError):
        Int(3).value = 4


def test_new_name_pairs_are_independent():
    p1, n1 = new_name()
    p2, n2 = new_name()
    resolve(n1.resolver, T())
    assert p1.promise.resolved and not p2.promise.resolved
    assert port_type(p1)[1] is Pos and port_type(n1)[1] is Neg


def test_interacting_with_name_neg_resolves_name_pos():
    p, n = new_name(BoolTy)
    from inets.reference import SequentialEngine

    engine = SequentialEngine()
    engine.interact(T(), n)
    engine.drain()
    assert type(force_now(p)) is T


class TestDynamicChecks:
    @pytest.fixture(autouse=True)
    def dynamic(self):
        from inets.net import checking

        with checking("dynamic"):
            yield

    def test_and_on_int_rejected(self):
        r, rn = new_name(BoolTy)
        with pytest.raises(NetTypeError):
            And(rn, Int(0))

    def test_wrong_polarity_rejected(self):
        with pytest.raises(NetTypeError):
            And(T(), T())  # result slot needs a negative agent

    def test_positive_pair_rejected(self):
        with pytest.raises(NetTypeError):
            check_pair(Int(0), Int(1))

    def test_negative_pair_rejected(self):
        r, rn = new_name(BoolTy)
        with pytest.raises(NetTypeError):
            check_pair(IsEven(rn), IsEven(rn))

    def test_value_type_mismatch_in_pair(self):
        r, rn = new_name(BoolTy)
        with pytest.raises(NetTypeError):
            check_pair(Int(0), And(rn, T()))

    def test_typed_names_are_checked(self):
        _, int_in = new_name(IntTy)
        with pytest.raises(NetTypeError):
            IsEven(int_in)
        with pytest.raises(NetTypeError):
            check_pair(T(), int_in)

    def test_untyped_names_are_wildcards(self):
        _, any_in = new_name()
        And(any_in, T())
        IsEven(any_in)

    def test_if_branches_must_agree(self):
        _, int_in = new_name(IntTy)
        If(int_in, Int(1), Int(2))
        with pytest.raises(NetTypeError):
            If(int_in, Int(1), T())
        _, list_in = new_name(IntListTy)
        with pytest.raises(NetTypeError):
            If(list_in, Int(1), Int(2))

    def test_well_typed_constructions_pass(self):
        r, rn = new_name(BoolTy)
        And(rn, T())
        IsEven(rn)
        Cons(1, Nil())


def test_static_mode_does_not_check_at_runtime():
    # Tags are erased; mypy is the gate (tests/typecheck).
    from inets.net import checking

    with checking("static"):
        r, rn = new_name(BoolTy)
        And(rn, Int(0))


def test_read_back_values():
    assert read_back(Int(5)) == 5
    assert read_back(T()) is True
    assert read_back(F()) is False
    assert read_back(Nil()) == []
    assert read_back(Cons(1, Cons(2, Nil()))) == [1, 2]


def test_read_back_waits_for_name():
    p, n = new_name(BoolTy)
    threading.Timer(0.01, lambda: resolve(n.resolver, T())).start()
    assert read_back(p) is True


def test_read_back_list_through_name():
    p, n = new_name(IntListTy)
    threading.Timer(0.01, lambda: resolve(n.resolver, Nil())).start()
    assert read_back(Cons(1, p)) == [1]


def test_read_back_stuck():
    r, rn = new_name(BoolTy)
    with pytest.raises(StuckNet):
        read_back(IsEven(rn))
    with pytest.raises(StuckNet):
        read_back(Cons(1, Int(3)))
    p, _ = new_name()
    with pytest.raises(StuckNet):
        read_back(p, force_now)


def test_name_wire_between_two_ands():
    # T >< And(r, b) where b is wired to the result of F >< And(b', T)
    r, rn = new_name(BoolTy)
    b, bn = new_name(BoolTy)
    named = [(T(), And(rn, b)), (F(), And(bn, T()))]
    from inets.net import Net

    values, _ = reduce_sequential(Net(named, [r]))
    direct, _ = reduce_sequential(build_and(True, False))
    assert values == direct == [False]


@given(data=st.data())
@settings(max_examples=60, deadline=None)
def test_wire_transparency(data):
    net_args = data.draw(st.sampled_from(["and", "fib", "qsort"]))
    if net_args == "and":
        x, y = data.draw(st.booleans()), data.draw(st.booleans())
        make = lambda: build_and(x, y)
    elif net_args == "fib":
        n = data.draw(st.integers(0, 8))
        make = lambda: build_fib(n, cutoff=0)
    else:
        xs = data.draw(st.lists(st.integers(-20, 20), max_size=12))
        make = lambda: build_quicksort(xs)
    picks = data.draw(st.lists(st.booleans(), max_size=40))
    it = iter(picks)
    rewired = rewire_net(make(), lambda: next(it, False))
    expected, _ = reduce_sequential(make())
    got, _ = reduce_sequential(rewired)
    assert got == expected


def test_wire_transparency_in_parallel(pools):
    xs = [5, 3, 9, 1, 1, 7, 2]
    net = rewire_net(build_quicksort(xs), lambda: True)
    assert normalize(net, pools[4]) == [sorted(xs)]
