"""Exception hierarchy.

Every failure raised by the library derives from :class:`FlatMacError`, which is
itself a ``ValueError`` so callers validating user input can catch either.
"""


class FlatMacError(ValueError):
    pass


# set-family primitives
class EmptyCardinality(FlatMacError):
    pass


class FullCardinality(FlatMacError):
    pass


class CountOutOfRange(FlatMacError):
    pass


class ZeroHasNoCascade(FlatMacError):
    pass


# antichains
class BadFamily(FlatMacError):
    pass


# l = 2 base case
class NotTGraph(FlatMacError):
    def __init__(self, edge, message=None):
        self.edge = edge
        super().__init__(message or f"edge {sorted(edge)} lies in no triangle")


class StarterIndexOutOfRange(FlatMacError):
    pass


class NotProperlyLabeled(FlatMacError):
    pass


class TooManyDeletions(FlatMacError):
    pass


class OutOfTopRow(FlatMacError):
    pass


class OutOfBaseInterval(FlatMacError):
    pass


# recursions
class LevelRange(FlatMacError):
    pass


class GroundMismatch(FlatMacError):
    pass


# shadow-disjoint packings
class BadCore(FlatMacError):
    pass


class BadPlan(FlatMacError):
    pass


class OutOfSmallRange(FlatMacError):
    pass


# planner
class OutOfLargeRange(FlatMacError):
    pass


class OutOfLevelRange(FlatMacError):
    pass


class OutOfTheoremRange(FlatMacError):
    def __init__(self, n, m, interval, message=None):
        self.n = n
        self.m = m
        self.interval = interval
        lo, hi = interval
        self.nearest = lo if m < lo else hi
        super().__init__(
            message
            or f"size {m} is outside the flat-construction range [{lo}, {hi}] for n={n}; "
            f"nearest constructible size is {self.nearest}"
        )


class BadT(FlatMacError):
    pass


class VerificationFailure(RuntimeError):
    """A constructor produced something the independent verifier rejects."""


# characterization
class SizeRange(FlatMacError):
    pass


class NotNearTop(FlatMacError):
    pass


# oracle
class SearchTooLarge(FlatMacError):
    pass
