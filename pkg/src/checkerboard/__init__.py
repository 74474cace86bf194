"""Checkerboard graphs, their open books, and invariants of positive braid links."""

from .braidword import BraidWord, brick_diagram, linking_graph, parse_braid
from .coxeter import twist_order
from .invariants import Fingerprint, alexander, fingerprint, seifert_matrix, signature
from .laurent import LaurentPoly
from .openbook import surface_summary
from .oracle import alexander_closure
from .planegraph import CheckerboardGraph, canonical_code, isomorphic, mirror, validate

__all__ = [
    "BraidWord",
    "CheckerboardGraph",
    "Fingerprint",
    "LaurentPoly",
    "alexander",
    "alexander_closure",
    "brick_diagram",
    "canonical_code",
    "fingerprint",
    "isomorphic",
    "linking_graph",
    "mirror",
    "parse_braid",
    "seifert_matrix",
    "signature",
    "surface_summary",
    "twist_order",
    "validate",
]

__version__ = "0.1.0"
