"""Shared test helpers: rewiring nets, independent oracles, the mypy harness."""
import dataclasses
import re
from dataclasses import replace
from pathlib import Path

from inets.net import BoolTy, NameNeg, NamePos, Net, Pos, new_name, port_type


def rewire(agent, choose):
    """Copy ``agent``'s tree, routing each aux link picked by ``choose`` through a name pair.

    Returns the new agent and the extra active pairs that complete the wires.
    """
    extra = []
    changes = {}
    for name in type(agent)._aux_names:
        child = getattr(agent, name)
        new_child = child
        if type(child) not in (NamePos, NameNeg):
            new_child, more = rewire(child, choose)
            extra.extend(more)
            if choose():
                pos_end, neg_end = new_name()
                if port_type(child)[1] is Pos:
                    extra.append((new_child, neg_end))
                    new_child = pos_end
                else:
                    extra.append((pos_end, new_child))
                    new_child = neg_end
        changes[name] = new_child
    return (replace(agent, **changes) if changes else agent), extra


def rewire_net(net, choose):
    pairs = []
    for a1, a2 in net.pairs:
        b1, e1 = rewire(a1, choose)
        b2, e2 = rewire(a2, choose)
        pairs.append((b1, b2))
        pairs.extend(e1 + e2)
    return Net(pairs, list(net.interface))


def fib_matrix(n):
    """fib via 2x2 matrix powers; shares nothing with the iterative oracle."""
    def mul(a, b):
        return (
            (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
            (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
        )
    result = ((1, 0), (0, 1))
    base = ((1, 1), (1, 0))
    while n:
        if n & 1:
            result = mul(result, base)
        base = mul(base, base)
        n >>= 1
    return result[0][1]


def is_ascending(xs):
    return all(a <= b for a, b in zip(xs, xs[1:]))


def sample(symbol_cls):
    """An instance with every aux slot filled by a typed name of the right polarity."""
    aux = dict(symbol_cls.signature.aux)
    args = []
    for f in dataclasses.fields(symbol_cls):
        if f.name in aux:
            port = aux[f.name]
            ty = port.value if isinstance(port.value, type) else BoolTy
            pos_end, neg_end = new_name(ty)
            args.append(pos_end if port.polarity is Pos else neg_end)
        else:
            args.append(0)
    return symbol_cls(*args)


TYPECHECK_DIR = Path(__file__).parent / "typecheck"
_MARK = re.compile(r"#\s*E:\s*([\w-]+)")
_REPORT = re.compile(r"^(?P<file>[^:]+):(?P<line>\d+): error: .*\[(?P<code>[\w-]+)\]$")


def expected_errors(path):
    """(line, code) pairs marked ``# E: code`` in a fixture file."""
    out = set()
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        m = _MARK.search(line)
        if m:
            out.add((lineno, m.group(1)))
    return out


def mypy_errors(path):
    from mypy import api

    stdout, stderr, _ = api.run(
        [str(path), "--no-incremental", "--show-error-codes", "--no-error-summary", "--hide-error-context"]
    )
    assert not stderr, stderr
    found = set()
    for line in stdout.splitlines():
        m = _REPORT.match(line)
        if m:
            found.add((int(m.group("line")), m.group("code")))
    return found


def gate_line(snippet):
    lines = (TYPECHECK_DIR / "ill_typed.py").read_text().splitlines()
    return next(i for i, l in enumerate(lines, 1) if l.startswith(snippet))
