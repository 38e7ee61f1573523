"""Independent definition-literal oracles over plain arc sets.

Nothing here touches the bitmask internals of the package; each function is
the textbook definition written with Python sets so it can cross-check the
fast paths.
"""
from itertools import combinations, permutations, product


def arcset(d):
    return set(d.arcs())


def n_in(A, v, S=None):
    return {u for (u, x) in A if x == v and (S is None or u in S)}


def n_out(A, v, S=None):
    return {w for (x, w) in A if x == v and (S is None or w in S)}


def adjacent(A, u, v):
    return (u, v) in A or (v, u) in A


def di_simplicial(A, v, S=None):
    return all((u, w) in A for u in n_in(A, v, S) for w in n_out(A, v, S) if u != w)


def chordal_by_definition(n, A):
    for k in range(1, n + 1):
        for S in combinations(range(n), k):
            S = set(S)
            if not any(di_simplicial(A, v, S) for v in S):
                return False
    return True


def symmetric_arcs(A):
    return {(u, v) for (u, v) in A if (v, u) in A}


def is_semicomplete(n, A):
    return all(adjacent(A, u, v) for u, v in combinations(range(n), 2))


def is_locally_semicomplete(n, A):
    for v in range(n):
        for nb in (n_in(A, v), n_out(A, v)):
            if any(not adjacent(A, a, b) for a, b in combinations(sorted(nb), 2)):
                return False
    return True


def is_quasi_transitive(n, A):
    return all(
        adjacent(A, u, w)
        for (u, v) in A
        for (x, w) in A
        if x == v and u != w
    )


def cell(A, v, u):
    return ((v, u) in A, (u, v) in A)


def is_weakly_quasi_transitive(n, A):
    for v in range(n):
        nb = n_in(A, v) | n_out(A, v)
        for u, w in combinations(sorted(nb), 2):
            if cell(A, v, u) != cell(A, v, w) and not adjacent(A, u, w):
                return False
    return True


def is_transitive_oriented(n, A):
    if symmetric_arcs(A):
        return False
    return all((u, w) in A for (u, v) in A for (x, w) in A if x == v and u != w)


def substitute(qn, QA, parts):
    """parts: list of (size, arcset); block-by-block numbering."""
    offs = []
    t = 0
    for size, _ in parts:
        offs.append(t)
        t += size
    A = set()
    for i, (size, HA) in enumerate(parts):
        A |= {(offs[i] + a, offs[i] + b) for a, b in HA}
    for i, j in QA:
        for a in range(parts[i][0]):
            for b in range(parts[j][0]):
                A.add((offs[i] + a, offs[j] + b))
    return t, A


def extended_semicomplete_family(n):
    """All labelled extended semicomplete digraphs on n vertices, built by
    substituting independent sets into semicomplete digraphs."""
    found = set()
    for k in range(1, n + 1):
        pairs = list(combinations(range(k), 2))
        for codes in product((1, 2, 3), repeat=len(pairs)):
            QA = set()
            for (a, b), c in zip(pairs, codes):
                if c & 1:
                    QA.add((a, b))
                if c & 2:
                    QA.add((b, a))
            # every surjection vertex -> block
            for f in product(range(k), repeat=n):
                if len(set(f)) != k:
                    continue
                A = frozenset((x, y) for x in range(n) for y in range(n) if x != y and (f[x], f[y]) in QA)
                found.add(A)
    return found


def is_induced_chordless_cycle(A, cyc, symmetric):
    k = len(cyc)
    for i in range(k):
        for j in range(i + 1, k):
            a, b = cyc[i], cyc[j]
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if symmetric:
                both = (a, b) in A and (b, a) in A
                if consecutive != both:
                    return False
            elif not consecutive and adjacent(A, a, b):
                return False
    if symmetric:
        return True
    for i in range(k):
        a, b = cyc[i], cyc[(i + 1) % k]
        if (a, b) not in A or (b, a) in A:
            return False
    return True


def shortest_nonsymmetric_induced_cycle_len(n, A, min_len=3):
    for k in range(min_len, n + 1):
        for vs in combinations(range(n), k):
            for rest in permutations(vs[1:]):
                if is_induced_chordless_cycle(A, (vs[0],) + rest, symmetric=False):
                    return k
    return None


def isomorphic_by_listing(A, listing, PA, k):
    """listing[i] is the image of pattern vertex i."""
    for i in range(k):
        for j in range(k):
            if i != j and ((listing[i], listing[j]) in A) != ((i, j) in PA):
                return False
    return True
