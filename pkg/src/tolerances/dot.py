"""Graphviz DOT rendering of tolerances, quasiorders and lattices."""

from __future__ import annotations

from .lattice import FiniteLattice
from .relation import Quasiorder, Tolerance, iter_bits


def _q(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def tolerance_graph(R: Tolerance, name: str = "tolerance") -> str:
    """Undirected graph of ``R`` without loops."""
    labels = R.universe.labels
    lines = [f"graph {_q(name)} {{"]
    lines += [f"  {_q(x)};" for x in labels]
    for i, row in enumerate(R.rows):
        for j in iter_bits(row):
            if i < j:
                lines.append(f"  {_q(labels[i])} -- {_q(labels[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def quasiorder_hasse(Q: Quasiorder, name: str = "quasiorder") -> str:
    """Hasse diagram of the partial-order quotient, drawn bottom-up.

    Mutually related distinct elements are joined by dashed undirected
    segments; each covering pair of classes becomes solid arrows from every
    member of the lower class to every member of the upper one.
    """
    labels = Q.universe.labels
    classes: dict[int, int] = {}
    for i, (up, down) in enumerate(zip(Q.rows, Q.down)):
        classes.setdefault(up & down, up & down)
    reps = sorted(classes, key=lambda c: (c & -c).bit_length())
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;"]
    lines += [f"  {_q(x)};" for x in labels]
    for c in reps:
        members = list(iter_bits(c))
        for a, b in zip(members, members[1:]):
            lines.append(f"  {_q(labels[a])} -> {_q(labels[b])} [style=dashed, dir=none];")
    first = {c: (c & -c).bit_length() - 1 for c in reps}
    for c in reps:
        i = first[c]
        strict_up = Q.rows[i] & ~c
        for d in reps:
            j = first[d]
            if not strict_up >> j & 1:
                continue
            between = strict_up & Q.down[j] & ~d
            if between:
                continue
            for a in iter_bits(c):
                for b in iter_bits(d):
                    lines.append(f"  {_q(labels[a])} -> {_q(labels[b])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_hasse(L: FiniteLattice, name: str = "lattice") -> str:
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;"]
    lines += [f"  {_q(x)};" for x in L.labels]
    for i, j in L.covers():
        lines.append(f"  {_q(L.label(i))} -> {_q(L.label(j))};")
    lines.append("}")
    return "\n".join(lines) + "\n"
