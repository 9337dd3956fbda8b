"""Exception hierarchy shared by every module."""

from __future__ import annotations


class QubatchError(Exception):
    """Base class for all library errors."""


class DomainError(QubatchError, ValueError):
    """An argument lies outside the mathematically meaningful range."""


class DimensionMismatchError(DomainError):
    """Two objects live in different ambient spaces (p or k differ)."""


class CapExceededError(QubatchError):
    """A computation would exceed the configured resource cap."""


class NotACodewordError(QubatchError):
    """The symbols are mutually inconsistent: their coset preimages do not meet."""


class AmbiguousDecodeError(QubatchError):
    """The chosen positions do not determine the information vector.

    ``residual`` is the nontrivial intersection of their subgroups.
    """

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


class NontrivialIntersectionError(DomainError):
    """The subgroups of a system have a nontrivial common intersection."""

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


class InvalidPlanError(DomainError):
    """A recovery plan reuses positions or pairs subgroups that intersect."""


class CapacityExceededError(QubatchError):
    """A batch request is larger than the number of recovery pairs."""


class IrreparableError(QubatchError):
    """No recovery pair survives the erasure set."""

    def __init__(self, message, erased):
        super().__init__(message)
        self.erased = frozenset(erased)
