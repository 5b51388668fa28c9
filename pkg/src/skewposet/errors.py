"""Exception types raised across the package."""


class SkewPosetError(Exception):
    pass


class ContainmentError(SkewPosetError, ValueError):
    """Inner partition is not contained in the outer one."""


class EmptyDiagram(SkewPosetError, ValueError):
    pass


class EmptyPartition(SkewPosetError, ValueError):
    pass


class ParseError(SkewPosetError, ValueError):
    pass


class AtMinimum(SkewPosetError):
    """The class is already the staircase class for its delta value."""


class TheoremViolation(SkewPosetError):
    """No delta-preserving cocover exists for a non-minimal class.

    If this is ever raised, the reduction theorem is false on the attached class.
    """

    def __init__(self, message, skew_class=None):
        super().__init__(message)
        self.skew_class = skew_class


class MalformedPair(SkewPosetError, ValueError):
    pass


class HypothesisNotMet(SkewPosetError):
    """A theorem's precondition does not hold; the check is skipped."""
