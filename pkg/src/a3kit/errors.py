"""Exception types shared across the package."""


class A3KitError(Exception):
    """Base class for all errors raised by a3kit."""


class DimensionMismatch(A3KitError):
    """Operands have incompatible dimensions."""


class AlgebraMismatch(A3KitError):
    """A representation or operator refers to a different algebra."""


class NotInvertible(A3KitError):
    """An exact determinant is zero where an invertible map is required."""


class AdmissibilityRequired(A3KitError):
    """The operation needs an algebra passing the admissibility law."""


class NotSkew(A3KitError):
    """A skew-symmetric tensor or form was required."""


class NotAYBESolution(A3KitError):
    """The given tensor does not solve the Yang-Baxter equation."""


class SpansNotComplementary(A3KitError):
    """The two spans do not decompose the ambient space."""


class SearchSpaceTooLarge(A3KitError):
    """Full enumeration would exceed the desk-scale budget."""


class RejectionBudgetExceeded(A3KitError):
    """Random generation failed the family's defining check too often."""


class UnknownExpression(A3KitError):
    """brute_residual was asked for an identity it does not know."""


class PreconditionFailed(A3KitError):
    """A construction's input failed a required check; carries the report."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class FileFormatError(A3KitError):
    """A document failed to parse; the message carries field context."""
