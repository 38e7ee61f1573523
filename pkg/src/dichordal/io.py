"""Text and DOT formats.

Text format::

    # optional comments, anywhere after '#'
    3          first non-comment line: vertex count
    0 1        one directed arc per line, 0-based
    1 0        a digon is written as two lines
"""
from __future__ import annotations

from .digraph import Digraph
from .errors import ParseError


def parse_text(text: str) -> Digraph:
    n = None
    arcs = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", lineno) from None
        if n is None:
            if len(values) != 1 or values[0] < 0:
                raise ParseError("first line must be a non-negative vertex count", lineno)
            n = values[0]
            continue
        if len(values) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = values
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"arc ({u}, {v}) out of range for n={n}", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        if (u, v) in seen:
            raise ParseError(f"repeated arc ({u}, {v})", lineno)
        seen.add((u, v))
        arcs.append((u, v))
    if n is None:
        raise ParseError("missing vertex count")
    return Digraph(n, arcs)


def read_digraph(path: str) -> Digraph:
    if path == "-":
        import sys

        return parse_text(sys.stdin.read())
    with open(path) as fh:
        return parse_text(fh.read())


def write_text(d: Digraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(str(d.n))
    lines.extend(f"{u} {v}" for u, v in d.arcs())
    return "\n".join(lines) + "\n"


def to_dot(d: Digraph, name: str = "D") -> str:
    """Digons become one ``dir=both`` edge; other arcs stay directed."""
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {v};" for v in range(d.n))
    for u, v in d.arcs():
        if d.has_arc(v, u):
            if u < v:
                lines.append(f"  {u} -> {v} [dir=both];")
        else:
            lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def compact(d: Digraph) -> str:
    """One-line form: vertex count and the pair-relation codes, e.g. ``3:120``."""
    return f"{d.n}:" + "".join(str(c) for c in d.relations())
