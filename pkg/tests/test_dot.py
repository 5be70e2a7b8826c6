from inets.dot import to_dot
from inets.net import BoolTy, new_name
from inets.systems import And, Cons, Nil, T, build_fib, build_quicksort


def body(text):
    return [line.strip() for line in text.splitlines()[1:-1]]


def test_single_agent():
    lines = body(to_dot(roots=[T()]))
    assert lines == ['n0 [label="T"];']


def test_active_pair():
    r, rn = new_name(BoolTy)
    b, bn = new_name(BoolTy)
    lines = body(to_dot([(T(), And(rn, b))]))
    nodes = [l for l in lines if "label=" in l and "->" not in l]
    edges = [l for l in lines if "->" in l]
    assert nodes == ['n0 [label="T"];', 'n1 [label="And"];']
    assert edges == ["n0 -> n1 [dir=both, color=red];"]


def test_attributes_and_aux_edges():
    text = to_dot(roots=[Cons(7, Nil())])
    assert 'n0 [label="Cons[7]"];' in text
    assert 'n0 -> n1 [taillabel="1"];' in text  # tail is aux port 1


def test_name_pair_is_dashed_edge():
    out, inp = new_name(BoolTy)
    r, rn = new_name(BoolTy)
    text = to_dot([(T(), And(rn, out)), (T(), And(inp, T()))])
    dashed = [l for l in text.splitlines() if "dashed" in l]
    assert len(dashed) == 1
    assert 'taillabel="1"' in dashed[0] and 'headlabel="2"' in dashed[0]
    assert "Name" not in text


def test_deterministic():
    texts = {to_dot(build_quicksort([3, 1, 2]).pairs) for _ in range(5)}
    assert len(texts) == 1
    assert to_dot(build_fib(5).pairs) == to_dot(build_fib(5).pairs)


def test_shape():
    text = to_dot(roots=[T()], name="g")
    assert text.startswith("digraph g {\n") and text.endswith("}\n")
