"""Exception types raised by the simulator."""


class RtsTdmaError(ValueError):
    """Base class for every validation failure in this package."""


class DistributionError(RtsTdmaError):
    """A degree distribution violates one of its invariants.

    ``reason`` is one of ``"non-unit-mass"``, ``"duplicate-degree"``,
    ``"degree-out-of-range"``, ``"non-positive-probability"``, ``"empty"``
    or ``"syntax"``.
    """

    def __init__(self, reason, message):
        super().__init__(f"{reason}: {message}")
        self.reason = reason


class MalformedInstanceError(RtsTdmaError):
    """A contention-phase instance is not well formed."""


class InfeasibleConfigError(RtsTdmaError):
    """The frame has no room for even one mini-slot."""


class DegenerateTimingError(RtsTdmaError):
    """Mini-slots are not shorter than CTP time slots."""


class ConfigError(RtsTdmaError):
    """A configuration file or sweep specification is invalid."""
