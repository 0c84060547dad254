"""Coded slotted ALOHA baseline.

CSA here is IRSA: each user repeats its *full* safety packet ``l`` times
over the ``N_I = T_F / tau_I`` slots of a frame, with ``l`` drawn from the
same degree law RTS-TDMA uses for its requests, and the receiver runs the
same peeling decoder.  Pointers ride in the packet header at no cost.
Every decoded user counts as one successful safety transmission; there is
no feedback phase and no cap on the number of winners.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .degree_dist import DegreeDistribution, validate
from .exceptions import ConfigError
from .protocol import FrameResult, run_frame_csa
from .sic import CapInstance
from .timing import TimingConfig


@dataclass(frozen=True)
class CsaConfig:
    n_i: int
    dist: DegreeDistribution

    def __post_init__(self):
        if self.n_i < 1:
            raise ConfigError(f"n_i must be >= 1, got {self.n_i}")
        validate(self.dist)

    @classmethod
    def from_timing(cls, cfg: TimingConfig, dist: DegreeDistribution) -> "CsaConfig":
        return cls(cfg.n_i, dist)


def csa_frame(m: int, cfg: CsaConfig, rng: np.random.Generator | None = None,
              cap: CapInstance | None = None) -> FrameResult:
    return run_frame_csa(m, cfg.n_i, cfg.dist, rng, cap=cap)
