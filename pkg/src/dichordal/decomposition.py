"""Modules and substitution-tree decomposition of weakly quasi-transitive digraphs.

A module is a vertex set that every outside vertex sees uniformly: the pair
relation from the outside vertex to each member is the same.  Every weakly
quasi-transitive digraph is either transitive oriented, semicomplete or
symmetric, or splits as a substitution around a non-trivial module;
``decompose_wqt`` applies that recursively and ``recompose`` folds the tree
back through substitution.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Union

from .classes import (
    is_quasi_transitive,
    is_semicomplete,
    is_symmetric,
    is_transitive_oriented,
    quasi_transitive_witness,
    weakly_quasi_transitive_witness,
)
from .digraph import Digraph, bits, induced_subdigraph, mask_of, relabel, substitution
from .errors import InvariantViolation, PreconditionError, UsageError


def _as_mask(d: Digraph, vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        mask = vertices
    else:
        vertices = list(vertices)
        for v in vertices:
            d.check_vertex(v)
        mask = mask_of(vertices)
    if mask & ~d.full:
        raise UsageError("vertex set is not contained in the digraph")
    return mask


def _splitters(d: Digraph, s: int) -> int:
    """Mask of outside vertices whose relation to the members of ``s`` varies."""
    found = 0
    for x in bits(d.full & ~s):
        o = d.out[x] & s
        i = d.inn[x] & s
        if (o and o != s) or (i and i != s):
            found |= 1 << x
    return found


def find_splitter(d: Digraph, vertices) -> int | None:
    s = _as_mask(d, vertices)
    if not s:
        raise UsageError("a module must be nonempty")
    sp = _splitters(d, s)
    return (sp & -sp).bit_length() - 1 if sp else None


def is_module(d: Digraph, vertices) -> bool:
    return find_splitter(d, vertices) is None


def smallest_module_containing(d: Digraph, seed) -> frozenset[int]:
    s = _as_mask(d, seed)
    if not s:
        raise UsageError("seed must be nonempty")
    while True:
        sp = _splitters(d, s)
        if not sp:
            return frozenset(bits(s))
        s |= sp


def find_nontrivial_module(d: Digraph) -> frozenset[int] | None:
    """First pair closure (pairs in lexicographic order) that is not all of V."""
    if d.n < 2:
        raise UsageError("need at least two vertices")
    full = d.full
    for a in range(d.n):
        for b in range(a + 1, d.n):
            s = 1 << a | 1 << b
            while True:
                sp = _splitters(d, s)
                if not sp:
                    break
                s |= sp
                if s == full:
                    break
            if s != full:
                return frozenset(bits(s))
    return None


def _component(start: int, nbrs, allowed: int) -> int:
    comp = frontier = 1 << start
    while frontier:
        nxt = 0
        for x in bits(frontier):
            nxt |= nbrs(x)
        frontier = nxt & allowed & ~comp
        comp |= frontier
    return comp


def _oriented_component(d: Digraph, start: int) -> int:
    """Vertices reachable by oriented paths: steps along non-symmetric arcs, either direction."""
    return _component(start, lambda x: d.out[x] ^ d.inn[x], d.full)


def find_module_wqt(d: Digraph) -> frozenset[int]:
    """Non-trivial module of a weakly quasi-transitive digraph that is neither
    quasi-transitive nor symmetric, built by the four-case construction.

    Pick ``v`` with non-adjacent ``u, w`` in N+(v) and N-(v).  M1 is the
    component of ``u`` in the complement of the underlying graph of the
    digon-neighbourhood of ``v``.  If M1 is not a module, take M2 (oriented-path
    component of ``v``) when all arcs between N+(v) xor N-(v) and M1 are
    symmetric, M3 (the closure below) when some are not, and M4 (oriented-path
    component of a non-symmetric arc's tail) when N+(v) xor N-(v) is empty.
    """
    wit = weakly_quasi_transitive_witness(d)
    if wit is not None:
        raise PreconditionError("digraph is not weakly quasi-transitive", wit)
    if is_quasi_transitive(d):
        raise PreconditionError("digraph is quasi-transitive")
    if is_symmetric(d):
        raise PreconditionError("digraph is symmetric")

    u, v, w = quasi_transitive_witness(d).vertices
    both = d.sym(v)
    if not (both >> u & 1 and both >> w & 1):
        raise InvariantViolation(f"{u} and {w} are not both digon-neighbours of {v}")
    adj = [d.out[x] | d.inn[x] for x in range(d.n)]

    m1 = _component(u, lambda x: both & ~adj[x] & ~(1 << x), both)
    if not _splitters(d, m1):
        return _checked(d, m1, "M1")

    xor = d.out[v] ^ d.inn[v]
    if not xor:
        f = next(x for x in range(d.n) if d.out[x] & ~d.inn[x])
        return _checked(d, _oriented_component(d, f), "M4")

    if all(not ((d.out[b] ^ d.inn[b]) & m1) for b in bits(xor)):
        return _checked(d, _oriented_component(d, v), "M2")

    m3 = 1 << u
    while True:
        grow = 0
        for h in bits(d.full & ~m3):
            if both >> h & 1:
                if m3 & ~adj[h]:
                    grow |= 1 << h
            elif d.sym(h) & m3:
                grow |= 1 << h
        if not grow:
            break
        m3 |= grow
    return _checked(d, m3, "M3")


def _checked(d: Digraph, m: int, name: str) -> frozenset[int]:
    size = m.bit_count()
    if not 2 <= size < d.n:
        raise InvariantViolation(f"{name} = {sorted(bits(m))} is a trivial vertex set")
    sp = _splitters(d, m)
    if sp:
        raise InvariantViolation(
            f"{name} = {sorted(bits(m))} is not a module (splitter {(sp & -sp).bit_length() - 1})"
        )
    return frozenset(bits(m))


# -- substitution trees -----------------------------------------------------


class LeafKind(str, Enum):
    TRANSITIVE_ORIENTED = "TransitiveOriented"
    SEMICOMPLETE = "Semicomplete"
    SYMMETRIC = "Symmetric"


LEAF_PREDICATES = {
    LeafKind.TRANSITIVE_ORIENTED: is_transitive_oriented,
    LeafKind.SEMICOMPLETE: is_semicomplete,
    LeafKind.SYMMETRIC: is_symmetric,
}


def leaf_kind(d: Digraph) -> LeafKind | None:
    for kind, pred in LEAF_PREDICATES.items():
        if pred(d):
            return kind
    return None


@dataclass(frozen=True)
class Leaf:
    kind: LeafKind
    digraph: Digraph
    labels: tuple[int, ...] = field(default=None)

    def __post_init__(self):
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(self.digraph.n)))
        else:
            object.__setattr__(self, "labels", tuple(self.labels))


@dataclass(frozen=True)
class Node:
    """Substitution of ``children[i]`` for vertex ``i`` of ``quotient``."""

    quotient: Digraph
    children: tuple
    quotient_kind: LeafKind | None = None

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(x for c in self.children for x in c.labels)


DecompTree = Union[Leaf, Node]


def _recompose_local(tree: DecompTree) -> Digraph:
    if isinstance(tree, Leaf):
        if len(tree.labels) != tree.digraph.n:
            raise UsageError("leaf label count does not match its digraph")
        return tree.digraph
    if not isinstance(tree, Node):
        raise UsageError(f"not a decomposition tree: {tree!r}")
    if len(tree.children) != tree.quotient.n:
        raise UsageError(
            f"node has {len(tree.children)} children for a {tree.quotient.n}-vertex quotient"
        )
    return substitution(tree.quotient, [_recompose_local(c) for c in tree.children])


def recompose(tree: DecompTree) -> Digraph:
    """Fold the tree through substitution.

    When the tree's labels are a permutation of ``0..N-1`` vertices are placed
    at their labels; otherwise they stay in block order.
    """
    d = _recompose_local(tree)
    labels = tree.labels
    if sorted(labels) == list(range(d.n)):
        return relabel(d, labels)
    return d


def _graft(tree: DecompTree, label: int, sub: DecompTree) -> DecompTree:
    """Substitute ``sub`` for the vertex labelled ``label`` inside ``tree``."""
    if isinstance(tree, Leaf):
        if tree.labels == (label,):
            return sub
        children = [
            sub if x == label else Leaf(LeafKind.TRANSITIVE_ORIENTED, Digraph(1), (x,))
            for x in tree.labels
        ]
        return Node(tree.digraph, children, tree.kind)
    children = [_graft(c, label, sub) if label in c.labels else c for c in tree.children]
    return Node(tree.quotient, children, tree.quotient_kind)


def _decompose(d: Digraph, labels: tuple[int, ...]) -> DecompTree:
    kind = leaf_kind(d)
    if kind is not None:
        return Leaf(kind, d, labels)
    if not is_quasi_transitive(d) and not is_symmetric(d):
        module = find_module_wqt(d)
    else:
        module = find_nontrivial_module(d)
    if module is None:
        raise InvariantViolation(
            f"weakly quasi-transitive digraph {d!r} is in no leaf class and has no non-trivial module"
        )
    keep_vertex = min(module)
    rest = [x for x in range(d.n) if x not in module or x == keep_vertex]
    quotient, qmap = induced_subdigraph(d, rest)
    inner, imap = induced_subdigraph(d, module)
    outer_tree = _decompose(quotient, tuple(labels[i] for i in qmap))
    inner_tree = _decompose(inner, tuple(labels[i] for i in imap))
    return _graft(outer_tree, labels[keep_vertex], inner_tree)


def decompose_wqt(d: Digraph) -> DecompTree:
    """Substitution tree whose leaves are transitive oriented, semicomplete or
    symmetric (first match in that order) and whose node quotients are leaf-class
    digraphs.  Labels in the tree are the vertices of ``d``."""
    wit = weakly_quasi_transitive_witness(d)
    if wit is not None:
        raise PreconditionError("digraph is not weakly quasi-transitive", wit)
    if d.n == 0:
        raise UsageError("cannot decompose the empty digraph")
    return _decompose(d, tuple(range(d.n)))


def tree_problems(tree: DecompTree) -> list[str]:
    """Structural checks: leaf predicates, node arity, blocks are modules."""
    problems = []
    whole = _recompose_local(tree)

    def walk(t: DecompTree, offset: int) -> int:
        if isinstance(t, Leaf):
            if not LEAF_PREDICATES[t.kind](t.digraph):
                problems.append(f"leaf {t.labels} fails {t.kind.value}")
            return t.digraph.n
        if len(t.children) < 2:
            problems.append(f"node {t.labels} has fewer than two children")
        pos = offset
        for c in t.children:
            size = walk(c, pos)
            block = ((1 << size) - 1) << pos
            if _splitters(whole, block):
                problems.append(f"block {c.labels} is not a module")
            pos += size
        return pos - offset

    walk(tree, 0)
    return problems


def tree_to_dict(tree: DecompTree) -> dict:
    if isinstance(tree, Leaf):
        return {
            "node": "leaf",
            "kind": tree.kind.value,
            "vertices": list(tree.labels),
            "arcs": [list(a) for a in tree.digraph.arcs()],
        }
    return {
        "node": "substitution",
        "quotient_kind": tree.quotient_kind.value if tree.quotient_kind else None,
        "quotient_arcs": [list(a) for a in tree.quotient.arcs()],
        "blocks": [list(c.labels) for c in tree.children],
        "children": [tree_to_dict(c) for c in tree.children],
    }


def tree_to_text(tree: DecompTree, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(tree, Leaf):
        arcs = " ".join(f"{tree.labels[a]}->{tree.labels[b]}" for a, b in tree.digraph.arcs())
        line = f"{pad}Leaf {tree.kind.value} vertices={list(tree.labels)}"
        return line + (f" arcs: {arcs}" if arcs else "")
    kind = tree.quotient_kind.value if tree.quotient_kind else "quotient"
    arcs = " ".join(f"{a}->{b}" for a, b in tree.quotient.arcs())
    lines = [f"{pad}Node {kind} n={tree.quotient.n}" + (f" arcs: {arcs}" if arcs else "")]
    lines.extend(tree_to_text(c, indent + 1) for c in tree.children)
    return "\n".join(lines)
