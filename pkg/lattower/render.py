"""Hasse diagrams in the DOT language"""

import io

from .poset import AbstractLattice


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def as_dot(lattice: AbstractLattice) -> str:
    """Digraph of the covering relation, bottom to top, in index order"""
    output = io.StringIO()
    print(f"digraph {_quote(lattice.name)} {{", file=output)
    print("  rankdir=BT;", file=output)
    print("  node [shape=box];", file=output)
    for i, label in enumerate(lattice.labels):
        print(f"  n{i} [label={_quote(label)}];", file=output)
    for lower, upper in lattice.hasse_edges:
        print(f"  n{lower} -> n{upper};", file=output)
    print("}", file=output)
    return output.getvalue()
