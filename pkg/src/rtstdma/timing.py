"""Frame geometry: CAP + BFP + CTP inside one frame of length ``t_frame``.

All durations are in milliseconds.  Slot counts are computed with exact
decimal arithmetic so that e.g. ``22 / 0.02`` floors to 1100 and not 1099.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

from .exceptions import ConfigError, DegenerateTimingError


def exact(x) -> Fraction:
    """Interpret a number by its shortest decimal representation."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(repr(float(x)))


@dataclass(frozen=True)
class TimingConfig:
    """Durations (ms) and CTP slot count of one frame."""

    t_frame: float
    tau_c: float
    tau_t: float
    tau_i: float
    n_t: int

    def __post_init__(self):
        for name in ("t_frame", "tau_c", "tau_t", "tau_i"):
            value = getattr(self, name)
            if not (value > 0) or not math.isfinite(value):
                raise ConfigError(f"{name} must be a positive duration, got {value!r}")
        if self.n_t < 0:
            raise ConfigError(f"n_t must be >= 0, got {self.n_t}")
        if not self.tau_c < self.tau_t:
            raise DegenerateTimingError(
                f"mini-slot ({self.tau_c} ms) must be shorter than a time slot ({self.tau_t} ms)"
            )
        if exact(self.tau_i) != exact(self.tau_t):
            raise ConfigError(
                f"CSA slot tau_i ({self.tau_i}) must equal CTP slot tau_t ({self.tau_t})"
            )

    @property
    def t_f(self) -> float:
        """BFP duration: one mini-slot per CTP allocation field."""
        return float(self.n_t * exact(self.tau_c))

    @property
    def n_c(self) -> int:
        """Mini-slots left for the CAP; ``<= 0`` means infeasible."""
        free = exact(self.t_frame) - self.n_t * exact(self.tau_c) - self.n_t * exact(self.tau_t)
        return math.floor(free / exact(self.tau_c))

    @property
    def n_i(self) -> int:
        """Slots in a CSA frame of the same duration."""
        return math.floor(exact(self.t_frame) / exact(self.tau_i))

    @property
    def feasible(self) -> bool:
        return self.n_c >= 1

    def with_(self, **changes) -> "TimingConfig":
        return replace(self, **changes)


#: Example-1 geometry: 100 ms frame, 0.02 ms mini-slots, 0.5 ms time slots.
EXAMPLE_TIMING = dict(t_frame=100.0, tau_c=0.02, tau_t=0.5, tau_i=0.5)
