"""Membership tests for the digraph classes, each with a failure witness.

Every ``*_witness`` function returns ``None`` when the digraph is in the class
and otherwise a :class:`ClassWitness` naming at most three vertices on which the
defining condition fails.  The ``is_*`` functions are thin boolean wrappers.
All scans are the literal O(n^3) definitions.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .digraph import Digraph, bits


class ClassLabel(str, Enum):
    SYMMETRIC = "Symmetric"
    ORIENTED = "Oriented"
    TRANSITIVE_ORIENTED = "TransitiveOriented"
    SEMICOMPLETE = "Semicomplete"
    LOCALLY_SEMICOMPLETE = "LocallySemicomplete"
    QUASI_TRANSITIVE = "QuasiTransitive"
    WEAKLY_QUASI_TRANSITIVE = "WeaklyQuasiTransitive"
    EXTENDED_SEMICOMPLETE = "ExtendedSemicomplete"


@dataclass(frozen=True)
class ClassWitness:
    label: ClassLabel
    vertices: tuple[int, ...]
    reason: str = ""

    def to_dict(self) -> dict:
        return {"class": self.label.value, "vertices": list(self.vertices), "reason": self.reason}


# direct containments: each key implies every label in its value
HIERARCHY: dict[ClassLabel, tuple[ClassLabel, ...]] = {
    ClassLabel.TRANSITIVE_ORIENTED: (ClassLabel.ORIENTED, ClassLabel.QUASI_TRANSITIVE),
    ClassLabel.SEMICOMPLETE: (
        ClassLabel.LOCALLY_SEMICOMPLETE,
        ClassLabel.QUASI_TRANSITIVE,
        ClassLabel.EXTENDED_SEMICOMPLETE,
    ),
    ClassLabel.QUASI_TRANSITIVE: (ClassLabel.WEAKLY_QUASI_TRANSITIVE,),
    ClassLabel.EXTENDED_SEMICOMPLETE: (ClassLabel.WEAKLY_QUASI_TRANSITIVE,),
    ClassLabel.SYMMETRIC: (ClassLabel.WEAKLY_QUASI_TRANSITIVE,),
}


def _first_pair(d: Digraph, masks) -> tuple[int, int] | None:
    for u in range(d.n):
        m = masks(u) >> (u + 1)
        if m:
            return u, u + 1 + ((m & -m).bit_length() - 1)
    return None


def semicomplete_witness(d: Digraph) -> ClassWitness | None:
    full = d.full
    pair = _first_pair(d, lambda u: full & ~(d.out[u] | d.inn[u] | 1 << u))
    if pair is None:
        return None
    return ClassWitness(ClassLabel.SEMICOMPLETE, pair, "non-adjacent pair")


def symmetric_witness(d: Digraph) -> ClassWitness | None:
    pair = _first_pair(d, lambda u: d.out[u] ^ d.inn[u])
    if pair is None:
        return None
    return ClassWitness(ClassLabel.SYMMETRIC, pair, "non-symmetric arc")


def oriented_witness(d: Digraph) -> ClassWitness | None:
    pair = _first_pair(d, lambda u: d.out[u] & d.inn[u])
    if pair is None:
        return None
    return ClassWitness(ClassLabel.ORIENTED, pair, "symmetric arc")


def transitive_oriented_witness(d: Digraph) -> ClassWitness | None:
    w = oriented_witness(d)
    if w is not None:
        return ClassWitness(ClassLabel.TRANSITIVE_ORIENTED, w.vertices, "symmetric arc")
    out = d.out
    for u in range(d.n):
        for v in bits(out[u]):
            missing = out[v] & ~out[u] & ~(1 << u)
            if missing:
                w = (missing & -missing).bit_length() - 1
                return ClassWitness(ClassLabel.TRANSITIVE_ORIENTED, (u, v, w), "u->v->w without u->w")
    return None


def is_transitive_oriented_by_disimplicial(d: Digraph) -> bool:
    """Second route: oriented and every vertex di-simplicial."""
    if oriented_witness(d) is not None:
        return False
    for v in range(d.n):
        for u in bits(d.inn[v]):
            if d.out[v] & ~(1 << u) & ~d.out[u]:
                return False
    return True


def locally_semicomplete_witness(d: Digraph) -> ClassWitness | None:
    for v in range(d.n):
        for side, nb in (("in", d.inn[v]), ("out", d.out[v])):
            for u in bits(nb):
                bad = nb & ~(d.out[u] | d.inn[u] | 1 << u)
                if bad:
                    w = (bad & -bad).bit_length() - 1
                    return ClassWitness(
                        ClassLabel.LOCALLY_SEMICOMPLETE,
                        (v, u, w),
                        f"non-adjacent {side}-neighbours",
                    )
    return None


def quasi_transitive_witness(d: Digraph) -> ClassWitness | None:
    for u in range(d.n):
        for v in bits(d.out[u]):
            bad = d.out[v] & ~(d.out[u] | d.inn[u] | 1 << u)
            if bad:
                w = (bad & -bad).bit_length() - 1
                return ClassWitness(ClassLabel.QUASI_TRANSITIVE, (u, v, w), "u->v->w with u, w non-adjacent")
    return None


def weakly_quasi_transitive_witness(d: Digraph) -> ClassWitness | None:
    for v in range(d.n):
        o, i = d.out[v], d.inn[v]
        in_only, out_only, both = i & ~o, o & ~i, o & i
        for cell, others in ((in_only, out_only | both), (out_only, both)):
            for u in bits(cell):
                bad = others & ~(d.out[u] | d.inn[u])
                if bad:
                    w = (bad & -bad).bit_length() - 1
                    return ClassWitness(
                        ClassLabel.WEAKLY_QUASI_TRANSITIVE,
                        (v, u, w),
                        "non-adjacent asynchronous neighbours",
                    )
    return None


def extended_semicomplete_witness(d: Digraph) -> ClassWitness | None:
    """Non-adjacent vertices must have identical in- and out-neighbourhoods."""
    full = d.full
    for a in range(d.n):
        for b in bits((full & ~(d.out[a] | d.inn[a] | 1 << a)) >> (a + 1) << (a + 1)):
            diff = (d.out[a] ^ d.out[b]) | (d.inn[a] ^ d.inn[b])
            if diff:
                x = (diff & -diff).bit_length() - 1
                return ClassWitness(
                    ClassLabel.EXTENDED_SEMICOMPLETE,
                    (a, b, x),
                    "non-adjacent pair distinguished by a third vertex",
                )
    return None


def is_semicomplete(d: Digraph) -> bool:
    return semicomplete_witness(d) is None


def is_symmetric(d: Digraph) -> bool:
    return symmetric_witness(d) is None


def is_oriented(d: Digraph) -> bool:
    return oriented_witness(d) is None


def is_transitive_oriented(d: Digraph) -> bool:
    return transitive_oriented_witness(d) is None


def is_locally_semicomplete(d: Digraph) -> bool:
    return locally_semicomplete_witness(d) is None


def is_quasi_transitive(d: Digraph) -> bool:
    return quasi_transitive_witness(d) is None


def is_weakly_quasi_transitive(d: Digraph) -> bool:
    return weakly_quasi_transitive_witness(d) is None


def is_extended_semicomplete(d: Digraph) -> bool:
    return extended_semicomplete_witness(d) is None


def reach(d: Digraph, source: int, masks) -> int:
    seen = frontier = 1 << source
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= masks[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_strong(d: Digraph) -> bool:
    if d.n <= 1:
        return True
    full = d.full
    return reach(d, 0, d.out) == full and reach(d, 0, d.inn) == full


WITNESS_FUNCS = {
    ClassLabel.SYMMETRIC: symmetric_witness,
    ClassLabel.ORIENTED: oriented_witness,
    ClassLabel.TRANSITIVE_ORIENTED: transitive_oriented_witness,
    ClassLabel.SEMICOMPLETE: semicomplete_witness,
    ClassLabel.LOCALLY_SEMICOMPLETE: locally_semicomplete_witness,
    ClassLabel.QUASI_TRANSITIVE: quasi_transitive_witness,
    ClassLabel.WEAKLY_QUASI_TRANSITIVE: weakly_quasi_transitive_witness,
    ClassLabel.EXTENDED_SEMICOMPLETE: extended_semicomplete_witness,
}


def classify_with_witnesses(d: Digraph) -> tuple[frozenset[ClassLabel], dict[ClassLabel, ClassWitness]]:
    labels = set()
    failures = {}
    for label, func in WITNESS_FUNCS.items():
        w = func(d)
        if w is None:
            labels.add(label)
        else:
            failures[label] = w
    return frozenset(labels), failures


def classify(d: Digraph) -> frozenset[ClassLabel]:
    return classify_with_witnesses(d)[0]


def upward_closed(labels: frozenset[ClassLabel]) -> bool:
    return all(set(HIERARCHY.get(lab, ())) <= labels for lab in labels)
