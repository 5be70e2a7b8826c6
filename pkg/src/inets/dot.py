"""Graphviz export of a quiescent net.

One node per agent, labeled ``Label[attrs]``.  An auxiliary connection is
an edge from the holding agent (tail labeled with the slot index) to the
connected agent, arrowhead on its principal port.  Active pairs are red,
double-headed edges.  A NamePos/NameNeg pair is not drawn as nodes but as
one dashed edge between the two places the wire ends.  Free ports (names
whose partner is outside the snapshot) are omitted.

Node ids follow discovery order, so equal inputs give identical text.
"""
from __future__ import annotations

from typing import Any, Iterable

from .net import Agent, NameNeg, NamePos


def _label(a: Agent[Any, Any]) -> str:
    cls = type(a)
    attrs = ",".join(str(getattr(a, n)) for n in cls._attr_names)
    return cls.__name__ + (f"[{attrs}]" if attrs else "")


def to_dot(
    pairs: Iterable[tuple[Agent[Any, Any], Agent[Any, Any]]] = (),
    roots: Iterable[Agent[Any, Any]] = (),
    name: str = "net",
) -> str:
    nodes: list[str] = []
    edges: list[str] = []
    seen: dict[int, str] = {}
    keep: list[Agent[Any, Any]] = []  # pins ids for the duration of the walk
    # cell id -> {"-": endpoint, "+": endpoint}; endpoint = (node, port label)
    wires: dict[int, dict[str, tuple[str, str]]] = {}

    def wire_end(a: Agent[Any, Any], end: tuple[str, str] | None) -> None:
        if end is None:
            return
        if type(a) is NamePos:
            cell, side = id(a.promise._cell), "+"
        else:
            cell, side = id(a.resolver._cell), "-"  # type: ignore[attr-defined]
        wires.setdefault(cell, {})[side] = end

    def walk(root: Agent[Any, Any]) -> str | None:
        """Add the tree under ``root``; return its node id (None for a name)."""
        if type(root) in (NamePos, NameNeg):
            return None
        top: str | None = None
        stack: list[tuple[Agent[Any, Any], str | None, str]] = [(root, None, "")]
        while stack:
            a, holder, slot = stack.pop()
            if type(a) in (NamePos, NameNeg):
                wire_end(a, (holder, slot) if holder else None)
                continue
            if id(a) in seen:
                node = seen[id(a)]
            else:
                node = f"n{len(seen)}"
                seen[id(a)] = node
                keep.append(a)
                nodes.append(f'  {node} [label="{_label(a)}"];')
                aux = type(a)._aux_names
                for i in reversed(range(len(aux))):
                    stack.append((getattr(a, aux[i]), node, str(i + 1)))
            if holder is not None:
                edges.append(f'  {holder} -> {node} [taillabel="{slot}"];')
            if top is None:
                top = node
        return top

    for a1, a2 in pairs:
        n1 = walk(a1)
        n2 = walk(a2)
        if n1 is not None and n2 is not None:
            edges.append(f"  {n1} -> {n2} [dir=both, color=red];")
        elif n1 is None and n2 is not None:
            wire_end(a1, (n2, "0"))
        elif n2 is None and n1 is not None:
            wire_end(a2, (n1, "0"))
    for r in roots:
        walk(r)

    for ends in wires.values():
        if "-" in ends and "+" in ends:
            (t, tl), (h, hl) = ends["-"], ends["+"]
            edges.append(f'  {t} -> {h} [style=dashed, dir=none, taillabel="{tl}", headlabel="{hl}"];')

    return "\n".join([f"digraph {name} {{", *nodes, *edges, "}"]) + "\n"
