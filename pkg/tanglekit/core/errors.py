"""Exceptions raised by tanglekit.

Rule violations found by a checker are never raised; they are reported through
report.Report. These exceptions signal bad input or an instance that is out of reach.
"""


class TanglekitError(RuntimeError):
    """Base class for all tanglekit errors."""


class LoopEdge(TanglekitError):
    pass


class VertexOutOfRange(TanglekitError):
    pass


class InstanceTooLarge(TanglekitError):
    """An exhaustive computation was asked to run above its configured cap."""


class NotASeparation(TanglekitError):
    pass


class ApexTooLarge(TanglekitError):
    pass


class InvalidModel(TanglekitError):
    pass


class DisconnectedGraph(TanglekitError):
    pass


class IndexOutOfRange(TanglekitError):
    pass


class AlphaTooSmall(TanglekitError):
    pass


class TooSmall(TanglekitError):
    pass


class InvalidRotation(TanglekitError):
    pass


class InvalidConstant(TanglekitError):
    pass


class FormatError(TanglekitError):
    """A text file does not follow its documented line format."""

    def __init__(self, flp, line_num, msg):
        self.flp = flp
        self.line_num = line_num
        super().__init__(
            f"{flp}:{line_num}: {msg}" if line_num is not None else f"{flp}: {msg}"
        )


class InvalidVortex(TanglekitError):
    """A vortex society is not a list of distinct vertices of its graph."""
