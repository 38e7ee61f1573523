"""Di-simplicial vertices, perfect elimination orderings, violating triples.

A vertex ``v`` is di-simplicial when every in-neighbour ``u`` and out-neighbour
``w != u`` satisfy ``u -> w``.  ``greedy_eliminate`` strips the smallest
di-simplicial vertex until nothing is left (a perfect elimination ordering) or
no residual vertex qualifies (a stuck certificate).  Greedy never gets stuck on
a chordal digraph, since every residual digraph is again chordal; conversely a
completed order certifies chordality because the earliest vertex of any induced
subdigraph is di-simplicial there.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence, Union

from .digraph import Digraph, bits, reverse
from .errors import InvariantViolation, PreconditionError, UsageError


class ViolatingTriple(NamedTuple):
    """``u`` in N-(v), ``w`` in N+(v), ``u != w`` and no arc ``u -> w``."""

    u: int
    v: int
    w: int


class VertexType(str, Enum):
    TYPE1 = "Type1"
    TYPE2 = "Type2"
    NO_VIOLATION = "NoViolation"


@dataclass(frozen=True)
class Peo:
    order: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"kind": "peo", "order": list(self.order)}


@dataclass(frozen=True)
class Stuck:
    residual: tuple[int, ...]
    triples: tuple[ViolatingTriple, ...]

    def to_dict(self) -> dict:
        return {
            "kind": "stuck",
            "residual": list(self.residual),
            "triples": [list(t) for t in self.triples],
        }


ChordalityCertificate = Union[Peo, Stuck]


def _triple_within(d: Digraph, v: int, live: int) -> ViolatingTriple | None:
    """Lexicographically first violating triple for ``v`` inside vertex mask ``live``."""
    outs = d.out[v] & live
    if not outs:
        return None
    out = d.out
    for u in bits(d.inn[v] & live):
        bad = outs & ~out[u] & ~(1 << u)
        if bad:
            return ViolatingTriple(u, v, (bad & -bad).bit_length() - 1)
    return None


def _simplicial_within(d: Digraph, v: int, live: int) -> bool:
    outs = d.out[v] & live
    if not outs:
        return True
    out = d.out
    for u in bits(d.inn[v] & live):
        if outs & ~out[u] & ~(1 << u):
            return False
    return True


def find_violating_triple(d: Digraph, v: int) -> ViolatingTriple | None:
    d.check_vertex(v)
    return _triple_within(d, v, d.full)


def is_di_simplicial(d: Digraph, v: int) -> bool:
    d.check_vertex(v)
    return _simplicial_within(d, v, d.full)


def violating_triples(d: Digraph, v: int) -> list[ViolatingTriple]:
    """All violating triples for ``v``, ordered by ``(u, w)``."""
    d.check_vertex(v)
    result = []
    for u in bits(d.inn[v]):
        for w in bits(d.out[v] & ~d.out[u] & ~(1 << u)):
            result.append(ViolatingTriple(u, v, w))
    return result


def vertex_type(d: Digraph, v: int) -> VertexType:
    triples = violating_triples(d, v)
    if not triples:
        return VertexType.NO_VIOLATION
    sym = d.sym(v)
    if any(sym >> t.u & 1 or sym >> t.w & 1 for t in triples):
        return VertexType.TYPE2
    return VertexType.TYPE1


def _greedy(d: Digraph) -> tuple[list[int], int]:
    live = d.full
    order = []
    while live:
        for v in bits(live):
            if _simplicial_within(d, v, live):
                order.append(v)
                live &= ~(1 << v)
                break
        else:
            break
    return order, live


def greedy_eliminate(d: Digraph) -> ChordalityCertificate:
    order, live = _greedy(d)
    if not live:
        return Peo(tuple(order))
    residual = tuple(bits(live))
    triples = []
    for v in residual:
        t = _triple_within(d, v, live)
        if t is None:  # pragma: no cover - greedy would have removed v
            raise InvariantViolation(f"residual vertex {v} is di-simplicial")
        triples.append(t)
    return Stuck(residual, tuple(triples))


def is_chordal(d: Digraph) -> bool:
    return not _greedy(d)[1]


def peo_failure_index(d: Digraph, order: Sequence[int]) -> int | None:
    """Index of the first vertex that is not di-simplicial in its residual
    digraph, or ``None`` if ``order`` is a perfect elimination ordering."""
    if sorted(order) != list(range(d.n)):
        raise UsageError("order must be a permutation of the vertices")
    live = d.full
    for i, v in enumerate(order):
        if not _simplicial_within(d, v, live):
            return i
        live &= ~(1 << v)
    return None


def verify_peo(d: Digraph, order: Sequence[int]) -> bool:
    return peo_failure_index(d, order) is None


# -- canonical violating triples -------------------------------------------


def is_violating_triple(d: Digraph, t: Sequence[int]) -> bool:
    u, v, w = t
    return (
        u != w
        and bool(d.inn[v] >> u & 1)
        and bool(d.out[v] >> w & 1)
        and not d.out[u] >> w & 1
    )


def _sym_simplicial(d: Digraph, v: int) -> bool:
    """Di-simplicial in S(D), i.e. the digon-neighbours of ``v`` are pairwise digon-joined."""
    nb = d.sym(v)
    for u in bits(nb):
        if nb & ~d.sym(u) & ~(1 << u):
            return False
    return True


def is_canonical(d: Digraph, t: Sequence[int]) -> bool:
    u, v, w = t
    if not is_violating_triple(d, t):
        return False
    sym = d.sym(v)
    if not sym >> u & 1 and not _sym_simplicial(d, u):
        return False
    if not sym >> w & 1 and not _sym_simplicial(d, w):
        return False
    return True


def _sym_path(d: Digraph, start: int, goal: int, allowed: int) -> list[int]:
    """Shortest path of digons from ``start`` to ``goal`` inside ``allowed``."""
    parent = {start: start}
    frontier = [start]
    while frontier and goal not in parent:
        nxt = []
        for x in frontier:
            for y in bits(d.sym(x) & allowed):
                if y not in parent:
                    parent[y] = x
                    nxt.append(y)
        frontier = nxt
    path = [goal]
    while path[-1] != start:
        path.append(parent[path[-1]])
    return path[::-1]


def _canonicalize_in_side(d: Digraph, t: ViolatingTriple) -> ViolatingTriple:
    u, v, w = t
    if d.sym(v) >> u & 1 or _sym_simplicial(d, u):
        return t
    # S(D) minus the closed digon-neighbourhood of w
    allowed = d.full & ~(d.sym(w) | 1 << w)
    comp = frontier = 1 << u
    while frontier:
        nxt = 0
        for x in bits(frontier):
            nxt |= d.sym(x)
        frontier = nxt & allowed & ~comp
        comp |= frontier
    target = next((x for x in bits(comp) if _sym_simplicial(d, x)), None)
    if target is None:
        raise InvariantViolation(
            f"component of {u} avoiding the digon-neighbourhood of {w} has no vertex "
            "di-simplicial in S(D)"
        )
    for x in _sym_path(d, u, target, comp)[1:]:
        step = ViolatingTriple(x, v, w)
        if not is_violating_triple(d, step) or d.sym(v) >> x & 1:
            raise InvariantViolation(f"walk towards {target} broke the triple at {step}")
    return ViolatingTriple(target, v, w)


def check_canonicalization_preconditions(d: Digraph, t: Sequence[int]) -> None:
    from .classes import locally_semicomplete_witness
    from .forbidden import find_induced_nonsymmetric_cycle, scan_figure1, sd_chordal_witness

    if not is_violating_triple(d, t):
        raise PreconditionError(f"{tuple(t)} is not a violating triple")
    w = locally_semicomplete_witness(d)
    if w is not None:
        raise PreconditionError("digraph is not locally semicomplete", w)
    witness = sd_chordal_witness(d)
    if witness is not None:
        raise PreconditionError("S(D) is not chordal", witness)
    found = scan_figure1(d)
    if found:
        raise PreconditionError("digraph contains a forbidden pattern", found[0])
    cyc = find_induced_nonsymmetric_cycle(d, 3)
    if cyc is not None:
        raise PreconditionError("digraph contains an induced non-symmetric cycle", cyc)
    if not _sym_simplicial(d, t[1]):
        raise PreconditionError(f"vertex {t[1]} is not di-simplicial in S(D)")


def canonicalize_violating_triple(
    d: Digraph, t: Sequence[int], verify: bool = False
) -> ViolatingTriple:
    """Move the endpoints of a violating triple onto S(D)-simplicial vertices.

    The in-side endpoint is walked along digons, avoiding the closed digon
    neighbourhood of ``w``, to a vertex di-simplicial in S(D); every step is
    re-checked to still form a violating triple.  The out-side endpoint is then
    handled by the same routine on the reversed digraph.
    """
    if verify:
        check_canonicalization_preconditions(d, t)
    t = ViolatingTriple(*t)
    if not is_violating_triple(d, t):
        raise UsageError(f"{tuple(t)} is not a violating triple")
    t = _canonicalize_in_side(d, t)
    r = _canonicalize_in_side(reverse(d), ViolatingTriple(t.w, t.v, t.u))
    result = ViolatingTriple(r.w, r.v, r.u)
    if not is_canonical(d, result):
        raise InvariantViolation(f"{result} is not canonical")
    return result
