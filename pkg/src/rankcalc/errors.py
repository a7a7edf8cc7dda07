"""Exception hierarchy for the ranking calculus."""


class RankcalcError(Exception):
    """Base class for all errors raised by this package."""


class SpaceTooLargeError(RankcalcError):
    """World count would exceed the configured cap."""


class SpaceMismatchError(RankcalcError):
    """Operands belong to different possibility spaces."""


class FormulaError(RankcalcError):
    """Malformed or unresolvable proposition formula."""

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position


class PartitionError(RankcalcError):
    """Atoms do not form a partition, or an atom assignment is missing."""


class NormalizationError(RankcalcError):
    """Rank assignment whose minimum is not zero."""

    def __init__(self, message, minimum=None):
        super().__init__(message)
        self.minimum = minimum


class MeasurabilityError(RankcalcError):
    """Ranks discriminate worlds inside one atom of the declared field."""


class NonContingentError(RankcalcError):
    """Operation requires a proposition that is neither empty nor full."""


class EmptyConditionError(RankcalcError):
    """Conditioning on the empty proposition."""


class TopArithmeticError(RankcalcError):
    """Subtraction involving the TOP rank."""


class RevisionStepError(RankcalcError):
    """A step in a revision sequence is invalid."""

    def __init__(self, index, cause):
        super().__init__("revision step %d invalid: %s" % (index, cause))
        self.index = index
        self.cause = cause


class SearchBoundError(RankcalcError):
    """Exhaustive search requested beyond the supported bound."""


class TotalConflictError(RankcalcError):
    """Dempster combination of totally conflicting mass functions."""


class MaximalDoubtError(RankcalcError):
    """Conditional doubt on a maximally doubted condition (division by zero)."""


class ScaleError(RankcalcError):
    """Invalid rank-to-surprise scale map."""


class ModelFormatError(RankcalcError):
    """Malformed model or evidence file."""


class LawViolationError(RankcalcError):
    """A verification-form identity failed to hold (internal check)."""
