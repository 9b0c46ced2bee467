"""Exact computations with resolutions of the residue field over numerical semigroup rings."""

from .apery_resolution import (
    betti_via_tensor,
    check_complex,
    differential,
    symbolic_differential,
    truncated_homology,
    word_basis,
)
from .errors import NsresError
from .kunz import b_matrix, face_signature, in_cone, kunz_poset, same_face
from .linalg import QQ, Field
from .matrices import substitute, symbolize
from .semigroup import NumericalSemigroup, apery_set, contains, from_generators, is_med

__version__ = "0.1.0"

__all__ = [
    "NsresError",
    "NumericalSemigroup",
    "QQ",
    "Field",
    "apery_set",
    "b_matrix",
    "betti_via_tensor",
    "check_complex",
    "contains",
    "differential",
    "face_signature",
    "from_generators",
    "in_cone",
    "is_med",
    "kunz_poset",
    "same_face",
    "substitute",
    "symbolic_differential",
    "symbolize",
    "truncated_homology",
    "word_basis",
]
