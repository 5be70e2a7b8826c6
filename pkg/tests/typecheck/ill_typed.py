# Each line marked "# E: <code>" must be rejected by mypy with that error
# code; no other line may be flagged.
from inets.net import BoolTy, IntTy, new_name
from inets.reference import SequentialEngine
from inets.systems import And, Cons, Fib, If, Int, IsEven, Nil, QS, T

net = SequentialEngine()
result, result_in = new_name(BoolTy)
n_out, n_in = new_name(IntTy)

And(result_in, Int(0))  # E: arg-type
net.interact(Int(0), Int(1))  # E: arg-type
net.interact(IsEven(result_in), IsEven(result_in))  # E: arg-type
net.interact(T(), IsEven(result_in))  # E: misc
net.interact(result, Fib(0, n_in))  # E: misc
IsEven(n_in)  # E: arg-type
Cons(1, Int(2))  # E: arg-type
QS(Nil())  # E: arg-type
And(result_in)  # E: call-arg
And(result_in, T(), T())  # E: call-arg
Int(3).value = 4  # E: misc
If(n_in, T(), T())  # E: misc
