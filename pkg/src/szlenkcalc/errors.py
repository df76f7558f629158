"""Exception types shared across the package.

Exit-code mapping used by the CLI: parse errors are distinct from domain
errors, and size/overflow refusals are distinct from both.
"""


class CalcError(Exception):
    """Base class for domain and precondition failures."""


class ParseError(CalcError):
    """Malformed input text; carries the character position of the fault."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SizeBoundError(CalcError):
    """A brute-force oracle refused an input above its configured size."""


class DomainError(CalcError):
    """Argument outside the mathematical domain of the operation."""


class PreconditionError(CalcError):
    """A stated precondition of a formula does not hold."""


class NotALimitError(DomainError):
    """Fundamental sequences exist only for limit ordinals."""


class NotMemberError(DomainError):
    """Node does not belong to the requested tree family."""


class NotMaximalError(DomainError):
    """Operation requires a maximal node of the family."""


class InvariantViolationError(DomainError):
    """Structured value breaks its declared invariants."""


class MixedEpsilonError(DomainError):
    """Bounds being combined were taken at different epsilon values."""
