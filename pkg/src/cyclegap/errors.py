"""Exception hierarchy shared by all modules."""


class CycleGapError(Exception):
    """Base class for every error raised by this package."""


class InconsistentAdjacency(CycleGapError):
    pass


class NotConnected(CycleGapError):
    pass


class NotPlanar(CycleGapError):
    pass


class UnknownEdge(CycleGapError):
    pass


class MarkerSplit(CycleGapError):
    pass


class DegenerateCycle(CycleGapError):
    pass


class BadDegree(CycleGapError):
    pass


class NotCubic(CycleGapError):
    pass


class LoopEdge(CycleGapError):
    pass


class PortMismatch(CycleGapError):
    pass


class NotAMatching(CycleGapError):
    pass


class BadParameters(CycleGapError):
    pass


class UnknownName(CycleGapError):
    pass


class Stalled(CycleGapError):
    pass


class BadInterval(CycleGapError):
    pass


class Acyclic(CycleGapError):
    pass


class SpectrumIncomplete(CycleGapError):
    pass


class MarkerTooShort(CycleGapError):
    pass


class MarkerDestroyed(AssertionError, CycleGapError):
    pass


class NoSingleCycleEdge(AssertionError, CycleGapError):
    pass


class BadStart(CycleGapError):
    pass


class CircumferenceTooSmall(CycleGapError):
    pass


class BudgetExhausted(CycleGapError):
    pass


class FormatError(CycleGapError):
    """Base for file-format problems (mapped to exit code 3 by the CLI)."""


class BadHeader(FormatError):
    pass


class TruncatedRecord(FormatError):
    pass


class TooLarge(FormatError):
    pass


class SchemaViolation(FormatError):
    pass
