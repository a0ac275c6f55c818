"""Exception types shared across the package."""


class WmixError(Exception):
    """Base class for all library-specific errors."""


class ShapeError(WmixError):
    """Dimensions, party counts, or label counts do not match."""


class NormalizationError(WmixError):
    """A norm, weight sum, or trace is too far from 1."""


class DegenerateInputError(WmixError):
    """Input carries no usable amplitude (e.g. the zero vector)."""


class StateInvariantError(WmixError):
    """A constructed state violates hermiticity, positivity, or trace."""


class CapacityError(WmixError):
    """Requested object exceeds a configured size budget."""


class PartitionError(WmixError):
    """A cut or party partition is overlapping, incomplete, or empty."""


class RankDeficiencyError(WmixError):
    """A local filter cannot be built because some amplitude vanishes.

    ``support`` lists the parties that do carry amplitude; restrict the
    state to those parties and retry.
    """

    def __init__(self, message, support=()):
        super().__init__(message)
        self.support = tuple(support)


class ContractViolationError(WmixError):
    """An internal cross-check that must hold by construction failed."""
