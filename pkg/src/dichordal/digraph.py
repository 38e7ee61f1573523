"""Dense loop-free digraphs with digons, stored as adjacency bitmasks.

Vertices are ``0..n-1``. ``out[v]`` has bit ``w`` set iff ``v -> w`` is an arc,
``inn[v]`` has bit ``u`` set iff ``u -> v`` is an arc.  Digraphs are immutable.
"""
from __future__ import annotations

from enum import IntEnum
from typing import Iterable, Iterator, Sequence

from .errors import UsageError


class PairRelation(IntEnum):
    """State of an unordered pair ``{u, v}`` read from ``u``'s side.

    The integer value doubles as a 2-bit code: bit 0 is ``u -> v``,
    bit 1 is ``v -> u``.
    """

    NON_ADJACENT = 0
    FORWARD = 1
    BACKWARD = 2
    SYMMETRIC = 3

    def mirror(self) -> "PairRelation":
        if self is PairRelation.FORWARD:
            return PairRelation.BACKWARD
        if self is PairRelation.BACKWARD:
            return PairRelation.FORWARD
        return self


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Digraph:
    __slots__ = ("n", "out", "inn", "_hash")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise UsageError(f"vertex count must be non-negative, got {n}")
        out = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise UsageError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise UsageError(f"loop at vertex {u}")
            out[u] |= 1 << v
        self._set(n, out)

    def _set(self, n: int, out: Sequence[int]) -> None:
        inn = [0] * n
        for u in range(n):
            m = out[u]
            bit = 1 << u
            while m:
                low = m & -m
                inn[low.bit_length() - 1] |= bit
                m ^= low
        self.n = n
        self.out = tuple(out)
        self.inn = tuple(inn)
        self._hash = None

    @classmethod
    def from_masks(cls, n: int, out: Sequence[int]) -> "Digraph":
        """Build from out-neighbour masks without validation (hot path)."""
        d = cls.__new__(cls)
        d._set(n, out)
        return d

    @classmethod
    def from_relations(cls, n: int, codes: Sequence[int]) -> "Digraph":
        """Build from one PairRelation code per pair ``(u, v), u < v``, lexicographic."""
        out = [0] * n
        k = 0
        for u in range(n):
            for v in range(u + 1, n):
                c = codes[k]
                k += 1
                if c & 1:
                    out[u] |= 1 << v
                if c & 2:
                    out[v] |= 1 << u
        return cls.from_masks(n, out)

    # -- queries ------------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.out[u] | self.inn[u]) >> v & 1)

    def adj(self, v: int) -> int:
        """Mask of neighbours (arc in either direction)."""
        return self.out[v] | self.inn[v]

    def sym(self, v: int) -> int:
        """Mask of vertices joined to ``v`` by a digon."""
        return self.out[v] & self.inn[v]

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.out[u])]

    def relations(self) -> tuple[int, ...]:
        """PairRelation codes for all pairs ``u < v`` in lexicographic order."""
        out = self.out
        return tuple(
            (out[u] >> v & 1) | (out[v] >> u & 1) << 1
            for u in range(self.n)
            for v in range(u + 1, self.n)
        )

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise UsageError(f"vertex {v!r} out of range for n={self.n}")

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out == other.out

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.out))
        return self._hash

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Digraph({self.n}, {self.arcs()})"


def pair_relation(d: Digraph, u: int, v: int) -> PairRelation:
    d.check_vertex(u)
    d.check_vertex(v)
    if u == v:
        raise UsageError("pair_relation needs two distinct vertices")
    return PairRelation((d.out[u] >> v & 1) | (d.out[v] >> u & 1) << 1)


def in_nbrs(d: Digraph, v: int) -> frozenset[int]:
    d.check_vertex(v)
    return frozenset(bits(d.inn[v]))


def out_nbrs(d: Digraph, v: int) -> frozenset[int]:
    d.check_vertex(v)
    return frozenset(bits(d.out[v]))


def symmetric_part(d: Digraph) -> Digraph:
    """S(D): the spanning subdigraph made of the symmetric arcs."""
    return Digraph.from_masks(d.n, [d.out[v] & d.inn[v] for v in range(d.n)])


def underlying_graph(d: Digraph) -> Digraph:
    """Symmetric digraph with a digon wherever ``d`` has at least one arc."""
    return Digraph.from_masks(d.n, [d.out[v] | d.inn[v] for v in range(d.n)])


def reverse(d: Digraph) -> Digraph:
    return Digraph.from_masks(d.n, d.inn)


def complement_graph(d: Digraph) -> Digraph:
    """Symmetric digraph joining exactly the non-adjacent pairs of ``d``."""
    full = d.full
    return Digraph.from_masks(
        d.n, [full & ~(d.out[v] | d.inn[v] | 1 << v) for v in range(d.n)]
    )


def _compress(mask: int, index: dict[int, int]) -> int:
    m = 0
    for v in bits(mask):
        j = index.get(v)
        if j is not None:
            m |= 1 << j
    return m


def induced_subdigraph(d: Digraph, vertices: Iterable[int]) -> tuple[Digraph, tuple[int, ...]]:
    """Induced subdigraph on ``vertices`` (sorted) plus the new-to-old label map."""
    keep = sorted(set(vertices))
    for v in keep:
        d.check_vertex(v)
    index = {v: i for i, v in enumerate(keep)}
    sub_mask = mask_of(keep)
    out = [_compress(d.out[v] & sub_mask, index) for v in keep]
    return Digraph.from_masks(len(keep), out), tuple(keep)


def induced_mask(d: Digraph, mask: int) -> tuple[Digraph, tuple[int, ...]]:
    return induced_subdigraph(d, bits(mask))


def relabel(d: Digraph, labels: Sequence[int]) -> Digraph:
    """Vertex ``i`` of ``d`` becomes ``labels[i]``; ``labels`` must be a permutation."""
    if sorted(labels) != list(range(d.n)):
        raise UsageError("relabel needs a permutation of the vertex set")
    out = [0] * d.n
    for u in range(d.n):
        m = 0
        for v in bits(d.out[u]):
            m |= 1 << labels[v]
        out[labels[u]] = m
    return Digraph.from_masks(d.n, out)


def substitution(d: Digraph, parts: Sequence[Digraph]) -> Digraph:
    """D[H_1, ..., H_n]: replace vertex i by ``parts[i]``.

    Vertices of the result are numbered block by block: ``parts[0]`` first.
    """
    if len(parts) != d.n:
        raise UsageError(f"need {d.n} substituted digraphs, got {len(parts)}")
    offsets = []
    total = 0
    for i, h in enumerate(parts):
        if h.n == 0:
            raise UsageError(f"substituted digraph for vertex {i} is empty")
        offsets.append(total)
        total += h.n
    block = [((1 << h.n) - 1) << off for h, off in zip(parts, offsets)]
    out = [0] * total
    for i, h in enumerate(parts):
        across = 0
        for j in bits(d.out[i]):
            across |= block[j]
        off = offsets[i]
        for x in range(h.n):
            out[off + x] = (h.out[x] << off) | across
    return Digraph.from_masks(total, out)


def synchronous(d: Digraph, v: int, u: int, w: int) -> bool:
    """True iff neighbours ``u`` and ``w`` of ``v`` fall in the same cell of
    {N-(v) minus N+(v), N+(v) minus N-(v), N-(v) and N+(v)}."""
    d.check_vertex(v)
    d.check_vertex(u)
    d.check_vertex(w)
    nb = d.adj(v)
    if not (nb >> u & 1 and nb >> w & 1):
        raise UsageError(f"{u} and {w} must both be neighbours of {v}")
    if u == w:
        raise UsageError("synchronous needs two distinct neighbours")
    return pair_relation(d, v, u) == pair_relation(d, v, w)


def edgeless(n: int) -> Digraph:
    return Digraph(n)


def complete_symmetric(n: int) -> Digraph:
    full = (1 << n) - 1
    return Digraph.from_masks(n, [full & ~(1 << v) for v in range(n)])
