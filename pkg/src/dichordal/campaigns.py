"""Verification campaigns: run both sides of an equivalence over a population.

A population is either exhaustive (every labelled digraph with 1..max_n
vertices) or sampled (``samples`` draws from the theorem's generator).  Each
in-class instance is checked; disagreements are recorded verbatim in text
format so they can be replayed with the CLI.
"""
from __future__ import annotations

import os
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .chordality import (
    _simplicial_within,
    _sym_simplicial,
    canonicalize_violating_triple,
    is_canonical,
    is_chordal,
    violating_triples,
)
from .classes import (
    is_extended_semicomplete,
    is_locally_semicomplete,
    is_quasi_transitive,
    is_semicomplete,
    is_symmetric,
    is_weakly_quasi_transitive,
)
from .decomposition import decompose_wqt, recompose, tree_problems
from .digraph import Digraph, bits, substitution, symmetric_part
from .errors import UsageError
from .forbidden import (
    lsd_chordal_characterization,
    semicomplete_chordal_characterization,
    wqt_chordal_characterization,
)
from .generators import (
    MAX_ENUMERATE_N,
    GenConfig,
    count_digraphs,
    enumerate_digraphs,
    gen_digraph,
    gen_locally_semicomplete,
    gen_semicomplete,
    gen_symmetric,
    gen_wqt,
)
from .io import write_text

WORKERS_ENV = "DICHORDAL_WORKERS"


@dataclass(frozen=True)
class Population:
    max_n: int
    samples: int | None = None  # None means exhaustive over n = 1..max_n
    seed: int = 0
    min_n: int = 1

    @property
    def exhaustive(self) -> bool:
        return self.samples is None

    def describe(self) -> str:
        if self.exhaustive:
            return f"exhaustive n<={self.max_n}"
        return f"sampled {self.samples} seed={self.seed} n={self.min_n}..{self.max_n}"


@dataclass
class CampaignReport:
    theorem: str
    population: str
    checked: int = 0
    discrepancies: list = field(default_factory=list)
    groups: Counter = field(default_factory=Counter)
    group_discrepancies: Counter = field(default_factory=Counter)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def merge(self, other: "CampaignReport") -> None:
        self.checked += other.checked
        self.discrepancies.extend(other.discrepancies)
        self.groups.update(other.groups)
        self.group_discrepancies.update(other.group_discrepancies)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "population": self.population,
            "checked": self.checked,
            "discrepancy_count": len(self.discrepancies),
            "discrepancies": self.discrepancies,
            "groups": {
                g: {"checked": self.groups[g], "discrepancies": self.group_discrepancies[g]}
                for g in sorted(self.groups)
            },
            "wall_time": round(self.wall_time, 3),
        }

    def to_text(self) -> str:
        lines = [
            f"theorem: {self.theorem}",
            f"population: {self.population}",
            f"checked: {self.checked}",
            f"discrepancies: {len(self.discrepancies)}",
        ]
        for g in sorted(self.groups):
            lines.append(
                f"  {g}: checked {self.groups[g]}, discrepancies {self.group_discrepancies[g]}"
            )
        for rec in self.discrepancies:
            lines.append(f"- {rec['detail']}")
            lines.extend("    " + ln for ln in rec["digraph"].splitlines())
        lines.append(f"wall time: {self.wall_time:.2f}s")
        return "\n".join(lines)


# -- per-instance checks ----------------------------------------------------
# each returns None when the instance is outside the population's class,
# otherwise (detail-or-None, group tags)


def _equivalence(char, d: Digraph):
    got = char(d)
    expected = is_chordal(d)
    if got.chordal != expected:
        w = got.witness.to_dict() if got.witness else None
        return f"is_chordal={expected} characterization={got.chordal} witness={w}"
    return None


def check_t11(d: Digraph):
    if not is_semicomplete(d):
        return None
    return _equivalence(semicomplete_chordal_characterization, d), ()


def check_t24(d: Digraph):
    if not is_locally_semicomplete(d):
        return None
    return _equivalence(lsd_chordal_characterization, d), ()


def check_t33(d: Digraph):
    if not is_weakly_quasi_transitive(d):
        return None
    tags = []
    if is_quasi_transitive(d):
        tags.append("quasi_transitive")
    if is_extended_semicomplete(d):
        tags.append("extended_semicomplete")
    return _equivalence(wqt_chordal_characterization, d), tags


def check_lemma22(d: Digraph):
    s = symmetric_part(d)
    full = d.full
    for v in range(d.n):
        if _simplicial_within(d, v, full) and not _simplicial_within(s, v, full):
            return f"vertex {v} di-simplicial in D but not in S(D)", ()
    return None, ()


def check_roundtrip(d: Digraph):
    if not is_weakly_quasi_transitive(d):
        return None
    try:
        tree = decompose_wqt(d)
    except Exception as exc:  # any failure is a discrepancy worth recording
        return f"decompose_wqt raised {exc!r}", ()
    if recompose(tree) != d:
        return "recompose(decompose_wqt(D)) != D", ()
    problems = tree_problems(tree)
    if problems:
        return "; ".join(problems), ()
    return None, ()


def lemma23_hypotheses(d: Digraph) -> bool:
    return is_locally_semicomplete(d) and lsd_chordal_characterization(d).chordal


def check_lemma23(d: Digraph):
    if not lemma23_hypotheses(d):
        return None
    tags = []
    for v in range(d.n):
        if not _sym_simplicial(d, v):
            continue
        for t in violating_triples(d, v):
            tags.append("triples")
            try:
                r = canonicalize_violating_triple(d, t, verify=True)
            except Exception as exc:
                return f"canonicalize{tuple(t)} raised {exc!r}", tags
            if r.v != v or not is_canonical(d, r):
                return f"canonicalize{tuple(t)} returned non-canonical {tuple(r)}", tags
            if r != t:
                tags.append("moved")
    if tags:
        tags.append("instances_with_triples")
    return None, tags


def is_chordal_by_definition(d: Digraph) -> bool:
    """Every nonempty vertex subset induces a digraph with a di-simplicial vertex."""
    for mask in range(1, 1 << d.n):
        if not any(_simplicial_within(d, v, mask) for v in bits(mask)):
            return False
    return True


def check_oracle(d: Digraph):
    greedy = is_chordal(d)
    if greedy != is_chordal_by_definition(d):
        return f"greedy={greedy} definition={not greedy}", ()
    return None, ()


def has_induced_long_cycle(d: Digraph) -> bool:
    """Brute force over vertex subsets of size >= 4 of the underlying graph."""
    adj = [d.out[v] | d.inn[v] for v in range(d.n)]
    for k in range(4, d.n + 1):
        for vs in combinations(range(d.n), k):
            mask = sum(1 << v for v in vs)
            if any((adj[v] & mask).bit_count() != 2 for v in vs):
                continue
            seen = frontier = 1 << vs[0]
            while frontier:
                nxt = 0
                for x in bits(frontier):
                    nxt |= adj[x] & mask
                frontier = nxt & ~seen
                seen |= frontier
            if seen == mask:
                return True
    return False


def check_symmetric(d: Digraph):
    if not is_symmetric(d):
        return None
    chordal = is_chordal(d)
    if chordal == has_induced_long_cycle(d):
        return f"is_chordal={chordal} but induced long cycle present={not chordal}", ()
    return None, ()


def check_closure(d: Digraph):
    """``d`` is a substitution result; it must be weakly quasi-transitive."""
    if not is_weakly_quasi_transitive(d):
        return "substitution of weakly quasi-transitive parts is not weakly quasi-transitive", ()
    return None, ()


# -- populations ------------------------------------------------------------


def _sample_n(pop: Population, i: int) -> int:
    return random.Random(f"n:{pop.seed}:{i}").randint(pop.min_n, pop.max_n)


def _sample_lsd(pop: Population, i: int) -> Digraph:
    n = _sample_n(pop, i)
    if i % 2 and n <= 6:
        return gen_locally_semicomplete(GenConfig(n=n, seed=pop.seed, stream=i, strategy="rejection"))
    return gen_locally_semicomplete(GenConfig(n=n, seed=pop.seed, stream=i))


def _sample_closure(pop: Population, i: int) -> Digraph:
    rng = random.Random(f"closure:{pop.seed}:{i}")
    k = rng.randint(1, min(6, pop.max_n))
    quotient = gen_wqt(GenConfig(n=k, seed=pop.seed, stream=i))
    cap = max(1, (pop.max_n - k) // k + 1)
    if i % 2:
        parts = [Digraph(rng.randint(1, cap)) for _ in range(k)]
    else:
        parts = [
            gen_wqt(GenConfig(n=rng.randint(1, cap), seed=pop.seed, stream=i * 64 + j + 1))
            for j in range(k)
        ]
    return substitution(quotient, parts)


def _exhaustive_closure(max_n: int):
    """Every weakly quasi-transitive D on < max_n vertices with one vertex
    replaced by each 2-vertex digraph."""
    pairs = [Digraph.from_relations(2, [c]) for c in range(4)]
    for n in range(1, max_n):
        for d in enumerate_digraphs(n):
            if not is_weakly_quasi_transitive(d):
                continue
            for i in range(n):
                for h in pairs:
                    yield substitution(d, [h if j == i else Digraph(1) for j in range(n)])


@dataclass(frozen=True)
class Theorem:
    check: Callable
    sampler: Callable[[Population, int], Digraph]
    default_max_n: int


def _sampler(gen):
    return lambda pop, i: gen(GenConfig(n=_sample_n(pop, i), seed=pop.seed, stream=i))


THEOREMS: dict[str, Theorem] = {
    "t11": Theorem(check_t11, _sampler(gen_semicomplete), 8),
    "t24": Theorem(check_t24, _sample_lsd, 10),
    "t33": Theorem(check_t33, _sampler(gen_wqt), 12),
    "lemma22": Theorem(check_lemma22, _sampler(gen_digraph), 7),
    "lemma23": Theorem(check_lemma23, _sample_lsd, 6),
    "roundtrip": Theorem(check_roundtrip, _sampler(gen_wqt), 30),
    "closure": Theorem(check_closure, _sample_closure, 30),
    "oracle": Theorem(check_oracle, _sampler(gen_digraph), 7),
    "symmetric": Theorem(check_symmetric, _sampler(gen_symmetric), 8),
}


def _run_chunk(args) -> CampaignReport:
    theorem, pop, n, start, stop = args
    th = THEOREMS[theorem]
    report = CampaignReport(theorem, pop.describe())
    if pop.exhaustive:
        if theorem == "closure":
            source = _exhaustive_closure(pop.max_n)
        else:
            source = enumerate_digraphs(n, start, stop)
    else:
        source = (th.sampler(pop, i) for i in range(start, stop))
    for d in source:
        res = th.check(d)
        if res is None:
            continue
        detail, tags = res
        report.checked += 1
        for g in tags:
            report.groups[g] += 1
        if detail is not None:
            report.discrepancies.append({"detail": detail, "digraph": write_text(d)})
            for g in set(tags):
                report.group_discrepancies[g] += 1
    return report


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _chunks(theorem: str, pop: Population, workers: int):
    if pop.exhaustive:
        if theorem == "closure":
            yield (theorem, pop, 0, 0, 0)
            return
        for n in range(pop.min_n, pop.max_n + 1):
            total = count_digraphs(n)
            parts = workers * 4 if total >= 4096 and workers > 1 else 1
            step = -(-total // parts)
            for start in range(0, total, step):
                yield (theorem, pop, n, start, min(total, start + step))
    else:
        parts = workers * 4 if workers > 1 else 1
        step = max(1, -(-pop.samples // parts))
        for start in range(0, pop.samples, step):
            yield (theorem, pop, 0, start, min(pop.samples, start + step))


def run_campaign(theorem: str, population: Population, workers: int | None = None) -> CampaignReport:
    if theorem not in THEOREMS:
        raise UsageError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    if population.exhaustive and not 1 <= population.max_n <= MAX_ENUMERATE_N:
        raise UsageError(f"exhaustive campaigns support max_n <= {MAX_ENUMERATE_N}")
    if not population.exhaustive and population.samples < 0:
        raise UsageError("samples must be non-negative")
    workers = default_workers() if workers is None else workers
    start = time.perf_counter()
    report = CampaignReport(theorem, population.describe())
    chunks = list(_chunks(theorem, population, workers))
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_run_chunk, chunks):
                report.merge(part)
    else:
        for args in chunks:
            report.merge(_run_chunk(args))
    report.wall_time = time.perf_counter() - start
    return report
