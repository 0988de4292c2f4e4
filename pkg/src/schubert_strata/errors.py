"""Exception types shared across the library."""


class DimensionMismatch(ValueError):
    """Operands have incompatible dimensions."""


class SingularMatrix(ValueError):
    """A nonsingular matrix was required."""


class InvalidType(ValueError):
    """Not a supported simple type (family, rank)."""


class ZeroVector(ValueError):
    """A nonzero vector was required."""


class IndexOutOfRange(IndexError):
    """A 1-based node or position index is out of range."""


class TypeMismatch(ValueError):
    """Operands belong to different root systems."""


class NotReduced(ValueError):
    """A reduced word was required."""


class DiagramOutOfRange(ValueError):
    """Diagram positions exceed the word length."""
