"""Seeded random generators and exhaustive enumeration for each digraph class.

Every random generator takes a :class:`GenConfig`; identical configs give
identical digraphs.  Each generator output is checked against its class
predicate by the test suite, so soundness never rests on the construction.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, replace
from itertools import product
from typing import Iterator, Sequence

from .classes import is_locally_semicomplete
from .digraph import Digraph, bits, relabel, substitution
from .errors import GenerationFailure, UsageError

MAX_ENUMERATE_N = 5


@dataclass(frozen=True)
class GenConfig:
    n: int
    seed: int = 0
    p: float = 0.5
    depth: int = 2
    stream: int = 0
    strategy: str = "round"  # locally semicomplete: "round" or "rejection"
    lengths: tuple[int, ...] | None = None  # explicit round out-interval lengths
    max_attempts: int = 100_000

    def rng(self) -> random.Random:
        return random.Random(f"{self.seed}:{self.stream}")

    def substream(self, i: int) -> "GenConfig":
        return replace(self, seed=self.seed * 1_000_003 + self.stream, stream=i)


def _check_n(n: int) -> None:
    if n < 1:
        raise UsageError(f"n must be at least 1, got {n}")


# -- exhaustive -------------------------------------------------------------


def count_digraphs(n: int) -> int:
    return 4 ** (n * (n - 1) // 2)


def enumerate_digraphs(n: int, start: int = 0, stop: int | None = None) -> Iterator[Digraph]:
    """Every labelled loop-free digraph on ``n`` vertices, once each.

    Pair relations of ``(0,1), (0,2), ..., (n-2,n-1)`` are iterated in
    lexicographic order (last pair fastest).  ``start``/``stop`` select a slice
    of that sequence by index.
    """
    if not 1 <= n <= MAX_ENUMERATE_N:
        raise UsageError(f"exhaustive enumeration supports 1 <= n <= {MAX_ENUMERATE_N}, got {n}")
    m = n * (n - 1) // 2
    total = 4 ** m
    stop = total if stop is None else min(stop, total)
    if start == 0 and stop == total:
        for codes in product(range(4), repeat=m):
            yield Digraph.from_relations(n, codes)
        return
    for index in range(start, stop):
        yield digraph_at(n, index)


def digraph_at(n: int, index: int) -> Digraph:
    m = n * (n - 1) // 2
    codes = [0] * m
    for k in range(m - 1, -1, -1):
        codes[k] = index & 3
        index >>= 2
    return Digraph.from_relations(n, codes)


def digraph_index(d: Digraph) -> int:
    index = 0
    for c in d.relations():
        index = index << 2 | c
    return index


# -- base classes -----------------------------------------------------------


def _random_relabel(rng: random.Random, d: Digraph) -> Digraph:
    perm = list(range(d.n))
    rng.shuffle(perm)
    return relabel(d, perm)


def _semicomplete(rng: random.Random, n: int) -> Digraph:
    return Digraph.from_relations(n, [rng.randint(1, 3) for _ in range(n * (n - 1) // 2)])


def _symmetric(rng: random.Random, n: int, p: float) -> Digraph:
    return Digraph.from_relations(n, [3 if rng.random() < p else 0 for _ in range(n * (n - 1) // 2)])


def _transitive_oriented(rng: random.Random, n: int, p: float) -> Digraph:
    order = list(range(n))
    rng.shuffle(order)
    out = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                out[order[i]] |= 1 << order[j]
    # closure; later positions never reach earlier ones, so one backward sweep suffices
    for i in range(n - 1, -1, -1):
        v = order[i]
        reach = out[v]
        for w in bits(out[v]):
            reach |= out[w]
        out[v] = reach
    return Digraph.from_masks(n, out)


def gen_semicomplete(cfg: GenConfig) -> Digraph:
    _check_n(cfg.n)
    return _semicomplete(cfg.rng(), cfg.n)


def gen_symmetric(cfg: GenConfig) -> Digraph:
    _check_n(cfg.n)
    return _symmetric(cfg.rng(), cfg.n, cfg.p)


def gen_transitive_oriented(cfg: GenConfig) -> Digraph:
    _check_n(cfg.n)
    return _transitive_oriented(cfg.rng(), cfg.n, cfg.p)


def gen_digraph(cfg: GenConfig) -> Digraph:
    """Uniform over all labelled digraphs on ``cfg.n`` vertices."""
    _check_n(cfg.n)
    rng = cfg.rng()
    return Digraph.from_relations(cfg.n, [rng.randrange(4) for _ in range(cfg.n * (cfg.n - 1) // 2)])


# -- substitution-built classes --------------------------------------------


def _split(rng: random.Random, n: int, k: int) -> list[int]:
    """Sizes of ``k`` positive blocks summing to ``n``: geometric draws
    truncated so the total comes out exact."""
    q = min(1.0, k / n)
    sizes = []
    remaining = n
    for i in range(k - 1):
        cap = remaining - (k - 1 - i)
        s = 1
        while s < cap and rng.random() > q:
            s += 1
        sizes.append(s)
        remaining -= s
    sizes.append(remaining)
    rng.shuffle(sizes)
    return sizes


def _wqt_base(rng: random.Random, n: int, p: float) -> Digraph:
    kind = rng.randrange(3)
    if kind == 0:
        return _transitive_oriented(rng, n, p)
    if kind == 1:
        return _semicomplete(rng, n)
    return _symmetric(rng, n, p)


def _wqt(rng: random.Random, n: int, depth: int, p: float) -> Digraph:
    if n == 1:
        return Digraph(1)
    if depth <= 0:
        return _wqt_base(rng, n, p)
    k = rng.randint(1, n)
    if k == 1 or k == n:
        return _wqt_base(rng, n, p)
    quotient = _wqt_base(rng, k, p)
    parts = [_wqt(rng, s, depth - 1, p) for s in _split(rng, n, k)]
    return substitution(quotient, parts)


def gen_wqt(cfg: GenConfig) -> Digraph:
    """Random substitution tree over transitive oriented, semicomplete and
    symmetric pieces, recomposed and randomly relabelled."""
    _check_n(cfg.n)
    rng = cfg.rng()
    return _random_relabel(rng, _wqt(rng, cfg.n, cfg.depth, cfg.p))


def _qt(rng: random.Random, n: int, depth: int, p: float) -> Digraph:
    if n == 1:
        return Digraph(1)
    base = (lambda m: _transitive_oriented(rng, m, p)) if rng.random() < 0.5 else (
        lambda m: _semicomplete(rng, m)
    )
    if depth <= 0:
        return base(n)
    k = rng.randint(1, n)
    if k == 1 or k == n:
        return base(n)
    quotient = base(k)
    free = [i for i in range(k) if not quotient.sym(i)]
    if not free:
        quotient = _transitive_oriented(rng, k, p)
        free = list(range(k))
    sizes = [1] * k
    for i, s in zip(free, _split(rng, n - k + len(free), len(free))):
        sizes[i] = s
    parts = [_qt(rng, s, depth - 1, p) for s in sizes]
    return substitution(quotient, parts)


def gen_qt(cfg: GenConfig) -> Digraph:
    """Quasi-transitive digraphs built as class Q: transitive oriented or
    semicomplete quotients, non-trivial parts only at vertices on no digon."""
    _check_n(cfg.n)
    rng = cfg.rng()
    return _random_relabel(rng, _qt(rng, cfg.n, cfg.depth, cfg.p))


def gen_extended_semicomplete(cfg: GenConfig) -> Digraph:
    """Independent sets substituted into a random semicomplete digraph."""
    _check_n(cfg.n)
    rng = cfg.rng()
    k = rng.randint(1, cfg.n)
    quotient = _semicomplete(rng, k)
    parts = [Digraph(s) for s in _split(rng, cfg.n, k)]
    return _random_relabel(rng, substitution(quotient, parts))


# -- locally semicomplete ---------------------------------------------------


def round_digraph(lengths: Sequence[int]) -> Digraph:
    """Vertex ``i`` dominates the next ``lengths[i]`` vertices around a circle."""
    n = len(lengths)
    out = [0] * n
    for i, r in enumerate(lengths):
        if not 0 <= r <= n - 1:
            raise UsageError(f"interval length {r} out of range for n={n}")
        for j in range(1, r + 1):
            out[i] |= 1 << ((i + j) % n)
    return Digraph.from_masks(n, out)


def _round_lengths(rng: random.Random, n: int, p: float) -> list[int]:
    lengths = [sum(rng.random() < p for _ in range(n - 1)) for _ in range(n)]
    lengths = [max(1, r) for r in lengths]
    # interval ends i + r_i must not decrease around the circle
    for _ in range(2):
        for i in range(n):
            lengths[i] = max(lengths[i], lengths[i - 1] - 1)
    return lengths


def gen_locally_semicomplete(cfg: GenConfig) -> Digraph:
    _check_n(cfg.n)
    rng = cfg.rng()
    if cfg.strategy == "round":
        if cfg.n == 1:
            return Digraph(1)
        lengths = cfg.lengths if cfg.lengths is not None else _round_lengths(rng, cfg.n, cfg.p)
        if len(lengths) != cfg.n:
            raise UsageError("need one interval length per vertex")
        d = round_digraph(lengths)
        if not is_locally_semicomplete(d):
            raise GenerationFailure(
                f"round lengths {list(lengths)} do not give a locally semicomplete digraph; "
                "interval ends i + r_i must be non-decreasing around the circle"
            )
        return _random_relabel(rng, d)
    if cfg.strategy == "rejection":
        if cfg.n > 6:
            raise UsageError("rejection sampling is limited to n <= 6")
        m = cfg.n * (cfg.n - 1) // 2
        for _ in range(cfg.max_attempts):
            codes = [rng.randint(1, 3) if rng.random() < cfg.p else 0 for _ in range(m)]
            d = Digraph.from_relations(cfg.n, codes)
            if is_locally_semicomplete(d):
                return d
        raise GenerationFailure(
            f"no locally semicomplete digraph in {cfg.max_attempts} attempts; "
            "raise max_attempts or p, or use strategy='round'"
        )
    raise UsageError(f"unknown strategy {cfg.strategy!r}")


GENERATORS = {
    "semicomplete": gen_semicomplete,
    "symmetric": gen_symmetric,
    "transitive-oriented": gen_transitive_oriented,
    "wqt": gen_wqt,
    "qt": gen_qt,
    "lsd": gen_locally_semicomplete,
    "extended-semicomplete": gen_extended_semicomplete,
    "any": gen_digraph,
}
