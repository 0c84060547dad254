"""One RTS-TDMA frame: contention access, SIC, slot assignment, transmission.

Also hosts the CSA frame, which runs the same contention machinery over
``n_i`` full-length slots with no feedback phase.  Every function takes an
explicit ``numpy.random.Generator``; nothing touches global random state.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .degree_dist import DegreeDistribution, sample_degrees
from .exceptions import InfeasibleConfigError, RtsTdmaError
from .sic import CapInstance, DecodeOutcome, RequestTransmission, peel
from .timing import EXAMPLE_TIMING, TimingConfig

RTS_TDMA = "rts_tdma"
CSA = "csa"

# below this many slots, rejection sampling of distinct copy slots gets wasteful
_REJECTION_MIN_SLOTS = 64


@dataclass(frozen=True)
class FrameResult:
    scheme: str
    offered: int
    granted: tuple[int, ...]
    outcome: DecodeOutcome

    @property
    def successes(self) -> int:
        return len(self.granted)


def _draw_copy_slots(degrees: np.ndarray, n_c: int, rng: np.random.Generator) -> list[tuple[int, ...]]:
    m = len(degrees)
    if m == 0:
        return []
    if n_c < _REJECTION_MIN_SLOTS:
        return [tuple(sorted(int(s) + 1 for s in rng.choice(n_c, size=int(d), replace=False)))
                for d in degrees]

    width = int(degrees.max())
    draws = rng.integers(1, n_c + 1, size=(m, width))
    todo = np.arange(m)
    while True:
        sub = draws[todo]
        deg = degrees[todo]
        dup = np.zeros(len(todo), dtype=bool)
        for j in range(1, width):
            live = j < deg
            for i in range(j):
                dup |= live & (sub[:, i] == sub[:, j])
        todo = todo[dup]
        if not len(todo):
            break
        # redraw whole rows: conditioning on distinctness keeps the law uniform
        draws[todo] = rng.integers(1, n_c + 1, size=(len(todo), width))
    return [tuple(sorted(row[:d].tolist())) for row, d in zip(draws, degrees)]


def run_cap(m: int, n_c: int, dist: DegreeDistribution, rng: np.random.Generator) -> CapInstance:
    """Realise one contention phase with vehicles ``1..m`` over ``n_c`` mini-slots."""
    if n_c < 1:
        raise InfeasibleConfigError(f"contention phase needs at least one mini-slot, got n_c={n_c}")
    if m < 0:
        raise RtsTdmaError(f"vehicle count must be >= 0, got {m}")
    degrees = np.minimum(sample_degrees(dist, rng, m), n_c)
    slots = _draw_copy_slots(degrees, n_c, rng)
    return CapInstance(
        n_c,
        [RequestTransmission(v, s) for v, s in enumerate(slots, start=1)],
        max_degree=dist.max_degree,
    )


def assign_slots(outcome: DecodeOutcome, n_t: int) -> tuple[int, ...]:
    """CTP slot ``k`` (1-based) goes to the ``k``-th extracted vehicle."""
    if n_t < 0:
        raise RtsTdmaError(f"n_t must be >= 0, got {n_t}")
    return tuple(outcome.extracted[:n_t])


def run_frame_rts(m: int, cfg: TimingConfig, dist: DegreeDistribution,
                  rng: np.random.Generator | None = None, cap: CapInstance | None = None) -> FrameResult:
    """Simulate one RTS-TDMA frame.

    Pass ``cap`` to bypass the random contention phase with a fixed instance.
    The BFP and CTP are ideal: every granted vehicle delivers its safety
    packet, every other vehicle stays silent until the next frame.
    """
    if not cfg.feasible:
        raise InfeasibleConfigError(f"n_c={cfg.n_c} leaves no contention phase")
    if cap is None:
        cap = run_cap(m, cfg.n_c, dist, rng)
    elif cap.n_c > cfg.n_c:
        raise RtsTdmaError(f"injected instance uses {cap.n_c} mini-slots, frame has {cfg.n_c}")
    outcome = peel(cap)
    granted = assign_slots(outcome, cfg.n_t)
    return FrameResult(RTS_TDMA, len(cap.transmissions), granted, outcome)


def run_frame_csa(m: int, n_i: int, dist: DegreeDistribution,
                  rng: np.random.Generator | None = None, cap: CapInstance | None = None) -> FrameResult:
    """Simulate one CSA (IRSA) frame of ``n_i`` slots; every decoded user succeeds."""
    if n_i < 1:
        raise InfeasibleConfigError(f"CSA frame needs at least one slot, got n_i={n_i}")
    if cap is None:
        cap = run_cap(m, n_i, dist, rng)
    outcome = peel(cap)
    return FrameResult(CSA, len(cap.transmissions), outcome.extracted, outcome)


def example_config(n_t: int, t_frame: float = EXAMPLE_TIMING["t_frame"]) -> TimingConfig:
    """Example-1/2 geometry (0.02 ms mini-slots, 0.5 ms slots) with ``n_t`` CTP slots."""
    return TimingConfig(t_frame, EXAMPLE_TIMING["tau_c"], EXAMPLE_TIMING["tau_t"],
                        EXAMPLE_TIMING["tau_i"], n_t)


def fig3_instance() -> CapInstance:
    """The five-vehicle walkthrough: x, y, z, v, w are vehicles 1..5 over 8 mini-slots."""
    return CapInstance.from_mapping(8, {
        1: [3, 5, 6],  # x
        2: [1, 3],     # y
        3: [1, 4],     # z
        4: [6, 8],     # v
        5: [6, 8],     # w
    })


def is_prefix(granted: Sequence[int], extracted: Sequence[int]) -> bool:
    return tuple(extracted[:len(granted)]) == tuple(granted)
