"""Chordal digraphs: recognition, forbidden subdigraphs and substitution trees."""
from .chordality import (
    ViolatingTriple,
    canonicalize_violating_triple,
    greedy_eliminate,
    is_chordal,
    is_di_simplicial,
    verify_peo,
    violating_triples,
    vertex_type,
)
from .classes import ClassLabel, classify
from .decomposition import decompose_wqt, find_module_wqt, is_module, recompose
from .digraph import Digraph, PairRelation, pair_relation, substitution, symmetric_part
from .errors import InvariantViolation, PreconditionError, UsageError
from .forbidden import (
    find_induced_nonsymmetric_cycle,
    lsd_chordal_characterization,
    scan_figure1,
    semicomplete_chordal_characterization,
    wqt_chordal_characterization,
)

__version__ = "0.1.0"

__all__ = [
    "ClassLabel",
    "Digraph",
    "InvariantViolation",
    "PairRelation",
    "PreconditionError",
    "UsageError",
    "ViolatingTriple",
    "canonicalize_violating_triple",
    "classify",
    "decompose_wqt",
    "find_induced_nonsymmetric_cycle",
    "find_module_wqt",
    "greedy_eliminate",
    "is_chordal",
    "is_di_simplicial",
    "is_module",
    "lsd_chordal_characterization",
    "pair_relation",
    "recompose",
    "scan_figure1",
    "semicomplete_chordal_characterization",
    "substitution",
    "symmetric_part",
    "verify_peo",
    "vertex_type",
    "violating_triples",
    "wqt_chordal_characterization",
]
