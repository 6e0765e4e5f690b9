"""Exception types raised by the library."""


class GrmError(Exception):
    """Base class for library errors."""


class InvalidInputError(GrmError, ValueError):
    """Parameters or polynomials that violate a documented precondition."""


class MalformedInputError(InvalidInputError):
    """Ragged matrices, out-of-range entries, wrong vector lengths."""


class FieldMismatchError(GrmError, ValueError):
    """Operands that live in different fields, rings or algebras."""


class NoEmbeddingError(GrmError, ValueError):
    pass


class NotInSubfieldError(GrmError, ValueError):
    pass


class UnsupportedError(GrmError, ValueError):
    """Operation only defined for a restricted parameter range (e.g. r = 1)."""


class NoLeadingTermError(GrmError, ValueError):
    pass


class InternalConsistencyError(GrmError, RuntimeError):
    """An identity that must hold by construction did not."""
