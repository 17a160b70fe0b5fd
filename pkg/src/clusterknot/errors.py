"""Exception hierarchy.

Every error carries a stable ``code`` so the CLI can report a
machine-readable name and map it to an exit status.
"""


class ClusterKnotError(Exception):
    code = "ClusterKnotError"
    exit_code = 4


class BraidSyntaxError(ClusterKnotError, SyntaxError):
    code = "SyntaxError"
    exit_code = 1


class StrandIndexError(ClusterKnotError, IndexError):
    code = "IndexError"
    exit_code = 1


class NotAKnot(ClusterKnotError):
    code = "NotAKnot"
    exit_code = 1


class SingularMatrix(ClusterKnotError, ZeroDivisionError):
    code = "SingularMatrix"


class DegenerateShape(ClusterKnotError, ValueError):
    code = "DegenerateShape"


class DegenerateTetrahedron(ClusterKnotError, ValueError):
    code = "DegenerateTetrahedron"


class DegenerateInput(ClusterKnotError, ZeroDivisionError):
    """A denominator of a cluster formula vanished.

    ``level`` and ``window`` locate the failure inside an evolution when known.
    """

    code = "DegenerateInput"

    def __init__(self, msg, level=None, window=None):
        super().__init__(msg)
        self.level = level
        self.window = window


class NotParabolicOnBoundary(ClusterKnotError):
    code = "NotParabolicOnBoundary"
    exit_code = 3


class InvalidRepresentation(ClusterKnotError, ValueError):
    code = "InvalidRepresentation"
    exit_code = 3


class NoSolutionFound(ClusterKnotError):
    code = "NoSolutionFound"


class ObstructionMismatch(ClusterKnotError):
    """Arc colouring does not close up: the rep's obstruction class differs from (-1)^n."""

    code = "ObstructionMismatch"
    exit_code = 2

    def __init__(self, msg, rep_parity=None, braid_parity=None):
        super().__init__(msg)
        self.rep_parity = rep_parity
        self.braid_parity = braid_parity


class InconsistentColoring(ClusterKnotError):
    code = "InconsistentColoring"
    exit_code = 3


class GenericityExhausted(ClusterKnotError):
    code = "GenericityExhausted"


class PathNotRecorded(ClusterKnotError, KeyError):
    code = "PathNotRecorded"
    exit_code = 3


class VerificationFailed(ClusterKnotError):
    code = "VerificationFailed"
    exit_code = 3
