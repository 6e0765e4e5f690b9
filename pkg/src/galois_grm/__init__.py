"""Galois rings GR(p^r, m), the group algebra F_q[G] over their additive
groups, and Generalized Reed-Muller codes described inside that algebra."""

from .errors import (
    FieldMismatchError,
    GrmError,
    InternalConsistencyError,
    InvalidInputError,
    MalformedInputError,
    NoEmbeddingError,
    NoLeadingTermError,
    NotInSubfieldError,
    UnsupportedError,
)
from .ff import FieldElem, FiniteField, find_irreducible, find_primitive, subfield_embedding
from .galois_ring import GaloisRing, GRElem, GroupOrdering, hensel_lift
from .group_algebra import GAElem, GroupAlgebra
from .grm import GrmContext, build_context, grm_code, grm_generators
from .linalg import Subspace

__version__ = "0.1.0"

__all__ = [
    "FieldElem",
    "FieldMismatchError",
    "FiniteField",
    "GAElem",
    "GRElem",
    "GaloisRing",
    "GrmContext",
    "GrmError",
    "GroupAlgebra",
    "GroupOrdering",
    "InternalConsistencyError",
    "InvalidInputError",
    "MalformedInputError",
    "NoEmbeddingError",
    "NoLeadingTermError",
    "NotInSubfieldError",
    "Subspace",
    "UnsupportedError",
    "build_context",
    "find_irreducible",
    "find_primitive",
    "grm_code",
    "grm_generators",
    "hensel_lift",
    "subfield_embedding",
]
