"""Exception types raised across the simulator.

All of them derive from :class:`GroverError`, which is itself a
``ValueError`` so callers that only care about bad input can catch that.
"""


class GroverError(ValueError):
    pass


class InvalidQubitCount(GroverError):
    pass


class QubitCapExceeded(GroverError):
    pass


class InvalidState(GroverError):
    """Amplitude array is not a normalized vector of length 2**n."""


class NonUnitaryGate(GroverError):
    pass


class TargetOutOfRange(GroverError):
    pass


class DuplicateTarget(GroverError):
    pass


class DimensionMismatch(GroverError):
    pass


class IndexOutOfRange(GroverError):
    pass


class NoSolutions(GroverError):
    """The marked set is empty, so the rotation angle is zero."""


class InvalidSize(GroverError):
    pass


class MultipleSolutionsUnsupported(GroverError):
    pass


class InvalidMarkedString(GroverError):
    pass


class SimulationError(GroverError):
    """An internal consistency assertion failed during a simulation."""
