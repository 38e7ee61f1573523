"""Named small digraphs used throughout tests, goldens and the CLI.

F_A .. F_D are the four forbidden semicomplete digraphs: a semicomplete
digraph is chordal exactly when its symmetric part is chordal and it contains
none of them as an induced subdigraph.  The arc comments use 1-based labels;
the digraphs themselves are 0-based.
"""
from .digraph import Digraph


def _digons(*pairs):
    for u, v in pairs:
        yield (u, v)
        yield (v, u)


# 1->2, 2->3, 3<->4, 4->1, 1<->3, 2<->4
F_A = Digraph(4, [(0, 1), (1, 2), (3, 0), *_digons((2, 3), (0, 2), (1, 3))])
# 1->2, 2->3, 3->4, 4->1, 1<->3, 2<->4
F_B = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), *_digons((0, 2), (1, 3))])
# 1->2, 2->3, 4->3, 4->1, 1<->3, 2<->4
F_C = Digraph(4, [(0, 1), (1, 2), (3, 2), (3, 0), *_digons((0, 2), (1, 3))])
# directed 3-cycle 1->2->3->1
F_D = Digraph(3, [(0, 1), (1, 2), (2, 0)])

C3O = F_D
C4O = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
C4S = Digraph(4, list(_digons((0, 1), (1, 2), (2, 3), (3, 0))))
TT3 = Digraph(3, [(0, 1), (1, 2), (0, 2)])
DIGON = Digraph(2, [(0, 1), (1, 0)])
K1 = Digraph(1)
P3S = Digraph(3, list(_digons((0, 1), (1, 2))))

PATTERNS = {"Fig1A": F_A, "Fig1B": F_B, "Fig1C": F_C, "Fig1D": F_D}

NAMED = {
    "F_A": F_A,
    "F_B": F_B,
    "F_C": F_C,
    "F_D": F_D,
    "C3O": C3O,
    "C4O": C4O,
    "C4S": C4S,
    "TT3": TT3,
    "DIGON": DIGON,
    "K1": K1,
    "P3S": P3S,
}
