"""Forbidden induced subdigraphs and the three chordality characterizations.

Three kinds of obstruction are detected:

* the four semicomplete patterns F_A, F_B, F_C (4 vertices) and F_D, the
  directed triangle (3 vertices), via a lookup table indexed by the pair
  relations of a sorted vertex subset;
* induced directed cycles all of whose arcs are non-symmetric;
* induced cycles of length at least 4 in the symmetric part S(D).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, permutations
from typing import NamedTuple

from .chordality import is_chordal
from .classes import (
    ClassWitness,
    locally_semicomplete_witness,
    semicomplete_witness,
    weakly_quasi_transitive_witness,
)
from .digraph import Digraph, bits, symmetric_part
from .errors import InvariantViolation, PreconditionError, UsageError
from .fixtures import PATTERNS


class WitnessKind(str, Enum):
    FIG1A = "Fig1A"
    FIG1B = "Fig1B"
    FIG1C = "Fig1C"
    FIG1D = "Fig1D"
    NON_SYMMETRIC_INDUCED_CYCLE = "NonSymmetricInducedCycle"
    SYMMETRIC_INDUCED_LONG_CYCLE = "SymmetricInducedLongCycle"


@dataclass(frozen=True)
class ForbiddenWitness:
    kind: WitnessKind
    vertices: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "vertices": list(self.vertices)}


class Characterization(NamedTuple):
    chordal: bool
    witness: ForbiddenWitness | None


def _rel(out, a: int, b: int) -> int:
    return (out[a] >> b & 1) | (out[b] >> a & 1) << 1


def _subset_code(out, vs) -> int:
    code = 0
    for a, b in combinations(vs, 2):
        code = code << 2 | _rel(out, a, b)
    return code


def _build_tables():
    """code of a sorted k-subset -> (kind, pattern vertex i -> subset position)."""
    tables = {3: {}, 4: {}}
    for name, pat in PATTERNS.items():
        kind = WitnessKind(name)
        k = pat.n
        # listing[i] = subset position of pattern vertex i; lexicographic order
        # keeps the least listing among automorphic embeddings
        for listing in permutations(range(k)):
            out = [0] * k
            for i in range(k):
                for j in bits(pat.out[i]):
                    out[listing[i]] |= 1 << listing[j]
            code = _subset_code(out, range(k))
            tables[k].setdefault(code, (kind, listing))
    return tables


_TABLES = _build_tables()


def scan_figure1(d: Digraph) -> list[ForbiddenWitness]:
    """Every induced copy of F_A..F_D, one witness per vertex subset.

    ``vertices[i]`` is the image of pattern vertex ``i``; results are sorted by
    kind, then vertex tuple.
    """
    found = []
    out = d.out
    for k in (4, 3):
        table = _TABLES[k]
        for vs in combinations(range(d.n), k):
            hit = table.get(_subset_code(out, vs))
            if hit is not None:
                kind, listing = hit
                found.append(ForbiddenWitness(kind, tuple(vs[p] for p in listing)))
    found.sort(key=lambda w: (w.kind.value, w.vertices))
    return found


def _shortest_induced_cycle(n: int, step, block, min_len: int) -> list[int] | None:
    """Shortest cycle s=p0 -> p1 -> ... -> p0 using ``step`` arcs, with no
    ``block`` adjacency between non-consecutive vertices.  Ties go to the
    lexicographically least sequence; the first vertex is the smallest."""
    best: list[int] | None = None

    def extend(s: int, path: list[int], blocked: int, allowed: int) -> None:
        nonlocal best
        last = path[-1]
        length = len(path) + 1
        for x in bits(step[last] & allowed & ~blocked):
            if block[s] >> x & 1:
                if step[x] >> s & 1 and length >= min_len and (best is None or length < len(best)):
                    best = path + [x]
                continue
            if best is not None and length + 1 >= len(best):
                continue
            path.append(x)
            extend(s, path, blocked | block[last] | 1 << x, allowed)
            path.pop()

    for s in range(n):
        if best is not None and len(best) <= min_len:
            break
        allowed = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        for p1 in bits(step[s] & allowed):
            extend(s, [s, p1], 1 << s | 1 << p1, allowed)
    return best


def find_induced_nonsymmetric_cycle(d: Digraph, min_len: int = 3) -> ForbiddenWitness | None:
    """Shortest induced directed cycle of non-symmetric arcs with length >= min_len."""
    if min_len < 3:
        raise UsageError("min_len must be at least 3")
    step = [d.out[v] & ~d.inn[v] for v in range(d.n)]
    block = [d.out[v] | d.inn[v] for v in range(d.n)]
    cyc = _shortest_induced_cycle(d.n, step, block, min_len)
    if cyc is None:
        return None
    return ForbiddenWitness(WitnessKind.NON_SYMMETRIC_INDUCED_CYCLE, tuple(cyc))


def sd_chordal_witness(d: Digraph) -> ForbiddenWitness | None:
    """None if S(D) is chordal, else an induced cycle of length >= 4 in S(D)."""
    s = symmetric_part(d)
    if is_chordal(s):
        return None
    cyc = _shortest_induced_cycle(s.n, s.out, s.out, 4)
    if cyc is None:
        raise InvariantViolation("S(D) is not chordal but has no induced long cycle")
    return ForbiddenWitness(WitnessKind.SYMMETRIC_INDUCED_LONG_CYCLE, tuple(cyc))


def is_sd_chordal(d: Digraph) -> bool:
    return is_chordal(symmetric_part(d))


def _verdict(*witnesses) -> Characterization:
    for w in witnesses:
        found = w()
        if found:
            return Characterization(False, found[0] if isinstance(found, list) else found)
    return Characterization(True, None)


def _require(witness: ClassWitness | None, what: str) -> None:
    if witness is not None:
        raise PreconditionError(f"digraph is not {what}: {witness.reason} at {witness.vertices}", witness)


def semicomplete_chordal_characterization(d: Digraph) -> Characterization:
    _require(semicomplete_witness(d), "semicomplete")
    return _verdict(lambda: sd_chordal_witness(d), lambda: scan_figure1(d))


def lsd_chordal_characterization(d: Digraph) -> Characterization:
    _require(locally_semicomplete_witness(d), "locally semicomplete")
    return _verdict(
        lambda: sd_chordal_witness(d),
        lambda: scan_figure1(d),
        lambda: find_induced_nonsymmetric_cycle(d, 3),
    )


def wqt_chordal_characterization(d: Digraph) -> Characterization:
    _require(weakly_quasi_transitive_witness(d), "weakly quasi-transitive")
    return _verdict(lambda: sd_chordal_witness(d), lambda: scan_figure1(d))


CHARACTERIZATIONS = {
    "semicomplete": semicomplete_chordal_characterization,
    "lsd": lsd_chordal_characterization,
    "wqt": wqt_chordal_characterization,
}


def witness_is_valid(d: Digraph, w: ForbiddenWitness) -> bool:
    """Re-check a witness directly against the definition of its kind."""
    vs = w.vertices
    k = len(vs)
    if len(set(vs)) != k or any(not 0 <= v < d.n for v in vs):
        return False
    out = d.out
    if w.kind.value in PATTERNS:
        pat = PATTERNS[w.kind.value]
        if pat.n != k:
            return False
        return all(
            _rel(out, vs[i], vs[j]) == _rel(pat.out, i, j)
            for i in range(k)
            for j in range(i + 1, k)
        )
    symmetric = w.kind is WitnessKind.SYMMETRIC_INDUCED_LONG_CYCLE
    if k < (4 if symmetric else 3):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            r = _rel(out, vs[i], vs[j])
            consecutive_fwd = j == i + 1
            consecutive_back = i == 0 and j == k - 1
            if symmetric:
                if consecutive_fwd or consecutive_back:
                    if r != 3:
                        return False
                elif r == 3:
                    return False
            else:
                if consecutive_fwd:
                    if r != 1:
                        return False
                elif consecutive_back:
                    if r != 2:
                        return False
                elif r != 0:
                    return False
    return True
