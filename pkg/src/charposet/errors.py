"""Exception hierarchy.

Four buckets matter to the CLI exit-code mapping: input errors (bad tables,
unknown families, malformed files), domain precondition errors (valid input,
invalid request), witness precondition errors, and internal-check errors that
signal a bug in the exact arithmetic or in an existence argument and should
never fire on correct code.
"""


class CharposetError(Exception):
    """Base class for all library errors."""


class InputError(CharposetError):
    """The supplied data does not describe a valid object."""


class DomainError(CharposetError):
    """Valid object, but the requested operation is not defined for it."""


class WitnessError(CharposetError):
    """A connectivity-witness construction cannot start from these endpoints."""


class InternalCheckError(CharposetError):
    """An invariant that must hold mathematically failed: implementation bug."""


# -- input ------------------------------------------------------------------

class NotAssociative(InputError):
    pass


class NoIdentity(InputError):
    pass


class NoInverse(InputError):
    pass


class ClosureTooLarge(InputError):
    pass


class UnknownFamily(InputError):
    pass


class OrderCapExceeded(InputError):
    pass


# -- domain -----------------------------------------------------------------

class NotPGroup(DomainError):
    pass


class LatticeTooLarge(DomainError):
    pass


class NotNormal(DomainError):
    pass


class NotAbelian(DomainError):
    pass


class EmptyInput(DomainError):
    pass


class NotASubgroup(DomainError):
    pass


class ConductorMismatch(DomainError):
    pass


class InvalidExponent(DomainError):
    pass


# -- witness preconditions --------------------------------------------------

class PreconditionFailed(WitnessError):
    pass


# -- bug signals ------------------------------------------------------------

class NotRationalInteger(InternalCheckError):
    pass


class NotDivisible(InternalCheckError):
    pass


class IncompleteIrr(InternalCheckError):
    pass


class NoConstituent(InternalCheckError):
    pass


class ChoiceExhausted(InternalCheckError):
    pass


class NotMultipleOfLinear(InternalCheckError):
    pass


class ComponentCoverageError(InternalCheckError):
    pass


class BoundViolation(InternalCheckError):
    pass


class CriterionViolation(InternalCheckError):
    pass
