"""Exception types shared across the package."""

from __future__ import annotations


class GraminvError(Exception):
    """Base class for every error raised by graminv."""


class IndexOutOfRange(GraminvError):
    """A vector, coordinate or pairing index lies outside its declared range."""


class SizeMismatch(GraminvError):
    """Row and column index sequences of a minor have different lengths."""


class DimensionMismatch(GraminvError):
    """A matrix does not have the shape required by the metric dimension."""


class MissingAssignment(GraminvError):
    """An evaluation point leaves some required variable unassigned."""


class ForeignVariable(GraminvError):
    """A polynomial mentions variables outside the expected namespace."""


class SingularCayley(GraminvError):
    """det(I + A) = 0, so the Cayley transform of A is undefined."""


class NotAnIsometry(GraminvError):
    """Matrix fails the defining equation Q^T G Q = G."""


class NotSkew(GraminvError):
    """Matrix fails the defining equation X^T G + G X = 0."""


class NotInvariantError(GraminvError):
    """Rewriting was attempted on a polynomial that is not invariant.

    Carries a witness (a Lie-algebra element or an isometry together with
    the nonzero polynomial it produces) proving non-invariance.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotInKernel(GraminvError):
    """A membership certificate was requested for a polynomial whose
    coordinate expansion is nonzero."""


class NoCertificateAtDegree(GraminvError):
    """The graded certificate system was inconsistent at the expected
    cofactor degree.  Must be reported as a finding, never retried
    silently at a higher degree."""


class ParseError(GraminvError):
    """Polynomial text could not be parsed.

    Positions are 1-based; ``expected`` lists the token kinds that would
    have been accepted at the point of failure.
    """

    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        detail = f"{line}:{column}: {message}"
        if self.expected:
            detail += " (expected " + ", ".join(self.expected) + ")"
        super().__init__(detail)


class InvalidIndex(ParseError):
    """A variable index in polynomial text is malformed (indices are 1-based)."""
