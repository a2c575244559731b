"""Exception types raised across the package."""

from __future__ import annotations


class ConjGFError(Exception):
    """Base class for all errors raised by this package."""


class InvalidPermutation(ConjGFError):
    """A supplied generator is not a bijection on the common domain."""


class ClosureExceedsCap(ConjGFError):
    """Closure under composition grew past the configured order cap."""


class NotAGroup(ConjGFError):
    """A multiplication table violates a group axiom.

    Carries the first violated axiom and a witness (element, pair or triple
    of element indices) so the caller can see exactly what failed.
    """

    def __init__(self, axiom: str, witness: tuple, message: str | None = None):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message or f"not a group: {axiom} fails at {witness}")


class InconsistentPresentation(ConjGFError):
    """Collection did not terminate in budget, or the compiled table fails its certificate."""


class NotPrimePower(ConjGFError):
    """Group order is not a power of the supplied prime."""


class InvalidParameters(ConjGFError):
    """Arguments violate the preconditions of a formula or constructor."""


class FingerprintMismatch(ConjGFError):
    """A catalog group compiled to something other than its expected structure."""


class RecursionDepthExceeded(ConjGFError):
    """Centralizer recursion failed to descend; indicates a bug, not bad input."""


class TupleCapExceeded(ConjGFError):
    """Brute-force tuple space is larger than the configured cap."""


class QuotientTooLarge(ConjGFError):
    """Central quotient exceeds the isoclinism search cap."""


class GroupSpecError(ConjGFError):
    """A group-spec document is malformed or carries unknown fields."""
