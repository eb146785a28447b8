"""Exception hierarchy shared by all sqgt modules."""


class SqgtError(Exception):
    """Base class for all domain errors raised by this package."""


class OutOfRange(SqgtError):
    """A value fell at or above the top threshold (or below zero)."""


class InvalidBin(SqgtError):
    """Bin index outside [0, Q)."""


class InvalidInput(SqgtError):
    """Malformed argument that violates an operation precondition."""


class InfeasibleThresholds(SqgtError):
    """The thresholds cannot support the requested construction."""


class CorruptSequence(SqgtError):
    """A sequence failed an invariant it was supposed to carry."""


class UnsupportedKind(SqgtError):
    """Operation not defined for this sequence kind."""


class HeadroomError(SqgtError):
    """Top threshold too small for the requested code parameters."""


class ParameterError(SqgtError):
    """Mismatched code-construction parameters (h < d, base.d < d, ...)."""


class InvalidBase(SqgtError):
    """A binary base matrix does not deliver its claimed error correction."""


class DecodingFailure(SqgtError):
    """The decoder could not produce a consistent defective set."""


class BudgetExceeded(SqgtError):
    """An exhaustive verification would exceed its work budget."""
