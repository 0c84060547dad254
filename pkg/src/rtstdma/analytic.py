"""Closed-form frame budget and RTS-TDMA/CSA crossover points.

With the BFP taking one mini-slot per CTP slot, the frame budget

    N_c * tau_c + N_t * tau_c + N_t * tau_t = N_I * tau_I = T_F

gives the mini-slot to CSA-slot ratio

    N_c / N_I = tau_t/tau_c - (tau_t/tau_c + 1) * N_t * tau_I / T_F.

RTS-TDMA beats CSA while this ratio exceeds one.  Exact rational arithmetic
is used throughout, so e.g. the critical frame for 150 vehicles comes out as
81.25 and not 81.25000000000001.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import DegenerateTimingError
from .timing import TimingConfig, exact


@dataclass(frozen=True)
class CriticalPoints:
    m_max_star: float
    t_f_star: float
    load_star: float


def mini_slot_count(cfg: TimingConfig) -> int:
    """CAP mini-slots left in the frame; zero or negative is infeasible."""
    return cfg.n_c


def slot_ratio(cfg: TimingConfig) -> float:
    """Continuous ``N_c / N_I`` for the given frame geometry."""
    q = exact(cfg.tau_t) / exact(cfg.tau_c)
    return float(q - (q + 1) * cfg.n_t * exact(cfg.tau_i) / exact(cfg.t_frame))


def _check(tau_t, tau_c) -> tuple[Fraction, Fraction]:
    t, c = exact(tau_t), exact(tau_c)
    if not (c > 0 and t > c):
        raise DegenerateTimingError(f"need tau_t > tau_c > 0, got tau_t={tau_t}, tau_c={tau_c}")
    return t, c


def critical_mmax(t_frame, tau_i, tau_t, tau_c) -> float:
    """Vehicle count at which ``N_c == N_I`` for a fixed frame length."""
    t, c = _check(tau_t, tau_c)
    return float(exact(t_frame) / exact(tau_i) * (t - c) / (t + c))


def critical_tframe(m_max, tau_i, tau_t, tau_c) -> float:
    """Frame length (ms) at which ``N_c == N_I`` for a fixed vehicle count."""
    t, c = _check(tau_t, tau_c)
    if not m_max > 0:
        raise ValueError(f"m_max must be positive, got {m_max}")
    return float(exact(m_max) * exact(tau_i) * (t + c) / (t - c))


def critical_load(tau_t, tau_c) -> float:
    """``M_max / N*_I``: how close the critical load sits to one slot per vehicle."""
    t, c = _check(tau_t, tau_c)
    return float((t - c) / (t + c))


def critical_points(t_frame, m_max, tau_i, tau_t, tau_c) -> CriticalPoints:
    return CriticalPoints(
        critical_mmax(t_frame, tau_i, tau_t, tau_c),
        critical_tframe(m_max, tau_i, tau_t, tau_c),
        critical_load(tau_t, tau_c),
    )


def mmax_threshold(t_frame, tau_i, tau_t, tau_c) -> int:
    """Largest integer ``M_max`` for which the floored ``N_c`` exceeds ``N_I``.

    Returns 0 if no vehicle count qualifies.
    """
    star = critical_mmax(t_frame, tau_i, tau_t, tau_c)
    best = 0
    # the integer answer sits within a step or two of the real crossover
    for m in range(max(0, math.floor(star) - 2), math.ceil(star) + 3):
        cfg = TimingConfig(t_frame, tau_c, tau_t, tau_i, m)
        if cfg.n_c > cfg.n_i:
            best = m
    return best


def max_feasible_mmax(t_frame, tau_c, tau_t) -> int:
    """Largest CTP size that still leaves at least one mini-slot."""
    per_vehicle = exact(tau_c) + exact(tau_t)
    n = math.floor((exact(t_frame) - exact(tau_c)) / per_vehicle)
    return max(n, -1)


def min_feasible_tframe(m_max, tau_c, tau_t) -> float:
    """Shortest frame (ms) that leaves at least one mini-slot for ``m_max`` vehicles."""
    return float(m_max * (exact(tau_c) + exact(tau_t)) + exact(tau_c))


def analytic_report(t_frame, m_max, tau_i, tau_t, tau_c) -> dict:
    """Every closed-form quantity for one geometry, as ordered key/value pairs."""
    cfg = TimingConfig(t_frame, tau_c, tau_t, tau_i, m_max)
    pts = critical_points(t_frame, m_max, tau_i, tau_t, tau_c)
    return {
        "t_frame_ms": t_frame,
        "m_max": m_max,
        "tau_c_ms": tau_c,
        "tau_t_ms": tau_t,
        "tau_i_ms": tau_i,
        "n_i": cfg.n_i,
        "n_c": cfg.n_c,
        "t_f_ms": cfg.t_f,
        "slot_ratio": slot_ratio(cfg),
        "feasible": cfg.feasible,
        "m_max_star": pts.m_max_star,
        "m_max_star_floor": math.floor(pts.m_max_star),
        "m_max_star_ceil": math.ceil(pts.m_max_star),
        "m_max_threshold": mmax_threshold(t_frame, tau_i, tau_t, tau_c),
        "m_max_feasible_limit": max_feasible_mmax(t_frame, tau_c, tau_t),
        "t_frame_star_ms": pts.t_f_star,
        "t_frame_min_feasible_ms": min_feasible_tframe(m_max, tau_c, tau_t),
        "load_star": pts.load_star,
        "n_i_star": pts.t_f_star / tau_i,
    }
