"""Exception types raised by gaborsuper.

Domain errors derive from :class:`DomainError` (a ``ValueError``) so callers
can catch the whole family; solver failures derive from ``RuntimeError``.
"""


class DomainError(ValueError):
    """Input violates a mathematical precondition."""


class DimensionError(DomainError):
    pass


class LatticeError(DomainError):
    pass


class NotAFrame(DomainError):
    """The Gabor system has lower frame bound at or below the frame tolerance."""


class NotDualPair(DomainError):
    pass


class SupportTooWide(DomainError):
    pass


class SingularWeight(DomainError):
    pass


class Singular(DomainError):
    pass


class MultiTerm(DomainError):
    pass


class NonPositive(DomainError):
    pass


class AsymmetryError(DomainError):
    pass


class SubmultiplicativityError(DomainError):
    pass


class NoConvergence(RuntimeError):
    """An iterative solver hit its iteration cap."""


class ConsistencyError(RuntimeError):
    """Two independent computation routes disagree; indicates a bug."""
