"""Exception types raised across the package."""


class FrameError(ValueError):
    """Base class for every error raised by retroframes."""


class NotSquare(FrameError):
    pass


class NotHermitian(FrameError):
    pass


class EmptyMatrix(FrameError):
    pass


class DimensionMismatch(FrameError):
    pass


class InvalidInterval(FrameError):
    pass


class NotAFrame(FrameError):
    """The family has lower frame bound 0 (within tolerance)."""


class SpaceMismatch(FrameError):
    """Two families are not indexed by the same measure space or dimension."""


class Infeasible(FrameError):
    """The biorthogonality system has no solution for some measure point.

    ``label`` and ``index`` identify the first offending point.
    """

    def __init__(self, message, label=None, index=None):
        super().__init__(message)
        self.label = label
        self.index = index


class UnknownScenario(FrameError):
    pass


class BadDimension(FrameError):
    pass


class FrameFileError(FrameError):
    """Malformed frame or measure-space file."""
