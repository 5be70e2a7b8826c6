# Must type-check cleanly: the well-typed counterparts of ill_typed.py.
from inets.net import BoolTy, IntListTy, IntTy, new_name
from inets.reference import SequentialEngine
from inets.systems import And, Cons, F, Fib, If, Int, IsEven, Nil, QS, T

net = SequentialEngine()
result, result_in = new_name(BoolTy)
n_out, n_in = new_name(IntTy)
xs_out, xs_in = new_name(IntListTy)

net.interact(T(), And(result_in, F()))
net.interact(Int(4), IsEven(result_in))
net.interact(Int(10), Fib(0, n_in))
net.interact(n_out, IsEven(result_in))
net.interact(Cons(1, Nil()), QS(xs_in))
net.interact(T(), If(n_in, Int(1), Int(2)))
net.interact(result, And(result_in, T()))
