"""Exception hierarchy for the linemaze package.

The CLI maps these onto exit codes: maze syntax/validation problems are
user-input errors (exit 1), exploration failures are runtime errors of the
robot model (exit 2), and inconsistency errors flag internal contradictions
such as miscalibrated constants or an impossible replay (exit 3).
"""


class LinemazeError(Exception):
    """Base class for all package errors."""


class MazeSyntaxError(LinemazeError):
    """Malformed maze file; carries the 1-based line number."""

    def __init__(self, line, message):
        super().__init__("line %d: %s" % (line, message))
        self.line = line


class MazeValidationError(LinemazeError):
    """Structurally valid file describing an invalid maze."""


class ExplorationError(LinemazeError):
    """The robot could not finish: budget exceeded, drift too large, etc."""


class MotionDivergenceError(ExplorationError):
    """Motion parameters never converge onto the line."""


class InconsistencyError(LinemazeError):
    """Internal contradiction: a state that valid inputs cannot produce."""


class CalibrationError(InconsistencyError):
    """Correction constants disagree with the encoder log they are applied to."""


class ArcDomainError(InconsistencyError):
    """Arc/chord geometry called outside its domain (e.g. height > radius)."""


class GraphQueryError(LinemazeError):
    """Unknown vertex or unreachable target in a graph query."""
