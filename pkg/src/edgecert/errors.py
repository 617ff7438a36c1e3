"""Exception hierarchy shared by every edgecert module."""


class EdgeCertError(Exception):
    """Base class for domain errors raised by edgecert."""


class LoopEdgeError(EdgeCertError, ValueError):
    pass


class VertexOutOfRangeError(EdgeCertError, ValueError):
    pass


class ParseError(EdgeCertError, ValueError):
    pass


class TooLargeError(EdgeCertError, ValueError):
    pass


class TooSmallError(EdgeCertError, ValueError):
    pass


class NonConvergenceError(EdgeCertError, RuntimeError):
    """Eigensolver ran out of sweeps. Indicates a numerics bug, not bad input."""


class InvalidPartitionError(EdgeCertError, ValueError):
    pass


class EmptySideError(EdgeCertError, ValueError):
    pass


class DisconnectedError(EdgeCertError, ValueError):
    pass


class NotSimpleError(EdgeCertError, ValueError):
    pass


class NotRegularError(EdgeCertError, ValueError):
    pass


class BadParityError(EdgeCertError, ValueError):
    pass


class BadTError(EdgeCertError, ValueError):
    pass


class BadNError(EdgeCertError, ValueError):
    pass


class NegativeDiscriminantError(EdgeCertError, ValueError):
    pass
