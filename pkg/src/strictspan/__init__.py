"""Decide when strict spanning edges certify that a simplicial 3-ball is
nonconstructible, and cross-check with exact shellability and
constructibility search."""
from ._backend import BACKEND
from .ball import BallReport, Verdict, is_reduced, is_strict, spanning_edges, theorem_decide
from .complex import Complex, Graph1Complex, simplex
from .oracles import is_constructible, is_shellable, verify_construction, verify_shelling
from .validation import is_2ball, is_2sphere, validate_3ball

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BallReport",
    "Complex",
    "Graph1Complex",
    "Verdict",
    "is_2ball",
    "is_2sphere",
    "is_constructible",
    "is_reduced",
    "is_shellable",
    "is_strict",
    "simplex",
    "spanning_edges",
    "theorem_decide",
    "validate_3ball",
    "verify_construction",
    "verify_shelling",
]
