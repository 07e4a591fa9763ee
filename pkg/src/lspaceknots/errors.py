"""Exceptions shared across the library.

Every failure caused by input outside an operation's mathematical domain
derives from DomainError; the CLI maps that family to exit code 1 with a
structured error object.  Genuine programming errors stay ordinary Python
exceptions.
"""


class DomainError(Exception):
    """Input lies outside the mathematical domain of an operation."""


class NotCoprime(DomainError):
    pass


class NotDivisible(DomainError):
    """Exact polynomial division was requested but a nonzero remainder is left."""


class NotLSpaceShape(DomainError):
    """A polynomial is not shaped like the Alexander polynomial of an L-space knot."""


class InvalidShape(DomainError):
    pass


class ConstraintError(DomainError):
    """A structurally valid expression carries indices violating a side condition."""


class ParseError(DomainError):
    """Unparseable text; ``position`` is the byte offset where parsing stopped."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class InvalidSemigroup(DomainError):
    """A candidate gap set violates the structural invariants (duality, growth)."""


class HypothesisViolated(DomainError):
    """The cabling formula was invoked outside its bound q >= p(2g - 1)."""


class InfiniteComplement(DomainError):
    pass


class NotIteratedTorus(DomainError):
    pass


class NotLSpace(DomainError):
    pass


class OutOfDomain(DomainError):
    pass


class Undefined(DomainError):
    pass
