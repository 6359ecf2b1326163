"""Exception types shared across the package."""


class PatternaError(Exception):
    """Base class for every error raised by this library."""


class IndexOutOfRange(PatternaError):
    """A condition or set mentions an index outside its declared range."""


class EmptyCondition(PatternaError):
    """The pair (empty, empty) is not a condition."""


class DuplicateCondition(PatternaError):
    """Strict validation found the same condition twice."""


class UnsupportedParams(PatternaError):
    """A pattern generator was called with parameters it cannot honor."""


class ArityMismatch(PatternaError):
    """A family and the object it should interpret disagree on arity."""


class MalformedUnionMap(PatternaError):
    """A union-closed family is structurally broken (wrong set count)."""


class BoundExceeded(PatternaError):
    """The requested instance is larger than the enumeration bound."""


class ParseError(PatternaError):
    """Malformed interchange text (JSON or DIMACS)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotConsistencyPattern(PatternaError):
    """double_positive needs a reasonable pattern with no inconsistency side."""


class NotFullyComplete(PatternaError):
    """The atoms-based witness construction needs a fully complete pattern."""


class NotReasonablePositive(PatternaError):
    """The disjoint-pieces witness construction needs a reasonable positive pattern."""


class CharacterizationPropertyViolated(PatternaError):
    """The supplied family does not satisfy the intersection characterization."""


class PreconditionFailure(PatternaError):
    """A construction's stated precondition does not hold for the input."""


class NotAnEmbedding(PatternaError):
    """A map between witness structures is not an embedding."""


class InternalCheckFailure(PatternaError):
    """A self-verification failed.  This signals a bug, never bad input."""


class WitnessVerificationFailure(InternalCheckFailure):
    """A decision procedure produced a witness that does not check out."""


class VerificationFailure(InternalCheckFailure):
    """A construction produced output that fails its own contract."""


class AxiomViolation(InternalCheckFailure):
    """A constructed witness structure violates its universal axioms."""


class TriangleFound(InternalCheckFailure):
    """The triangle-free doubling produced a triangle."""
