"""Exception types shared across the package."""


class DimensionMismatchError(ValueError):
    """Operands live over different n, r or variable widths."""


class ParseError(ValueError):
    """A text form (composition, permutation, ...) could not be parsed."""


class ShapeError(ValueError):
    """A diagram or tableau does not have the shape an operation requires."""


class ResourceLimitError(RuntimeError):
    """An enumeration exceeds its configured size bound."""


class NotInSchurSpanError(ValueError):
    """A polynomial is not a (per-alphabet symmetric) Schur-basis combination."""
