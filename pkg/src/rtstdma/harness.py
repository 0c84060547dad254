"""Seeded Monte-Carlo sweeps comparing RTS-TDMA against CSA.

Two sweeps are supported:

* ``mmax``: fixed frame length, ``N_t = M = M_max`` varied;
* ``tframe``: fixed ``M = N_t = M_max``, frame length varied.

Every frame gets its own generator seeded from
``(seed, point index, scheme, frame index)``, so results do not depend on
execution order and growing ``frames_per_point`` leaves the earlier frames
untouched.
"""
from __future__ import annotations

import csv
import io
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

import numpy as np

from .degree_dist import PAPER_DISTRIBUTION, DegreeDistribution, parse_distribution
from .exceptions import ConfigError, DistributionError
from .protocol import CSA, RTS_TDMA, run_frame_csa, run_frame_rts
from .timing import TimingConfig

log = logging.getLogger(__name__)

SWEEP_KINDS = ("mmax", "tframe")
_SCHEME_CODE = {RTS_TDMA: 0, CSA: 1}

CSV_HEADER = ("sweep_value", "scheme", "mean_throughput", "std_error",
              "frames", "seed", "n_c", "n_i", "feasible")

DEFAULTS = {
    "t_frame_ms": 100.0,
    "tau_c_ms": 0.02,
    "tau_t_ms": 0.5,
    "tau_i_ms": 0.5,
    "m_max": 150,
    "distribution": "2:0.5,3:0.28,8:0.22",
    "max_degree": 8,
    "frames": 500,
    "seed": 1,
}
DEFAULT_SWEEP_VALUES = {
    "mmax": tuple(range(50, 201, 10)),
    "tframe": tuple(float(t) for t in range(75, 121)),
}


@dataclass(frozen=True)
class SweepSpec:
    sweep_kind: str
    sweep_values: tuple
    t_frame: float = DEFAULTS["t_frame_ms"]
    tau_c: float = DEFAULTS["tau_c_ms"]
    tau_t: float = DEFAULTS["tau_t_ms"]
    tau_i: float = DEFAULTS["tau_i_ms"]
    m_max: int = DEFAULTS["m_max"]
    frames_per_point: int = DEFAULTS["frames"]
    seed: int = DEFAULTS["seed"]
    dist: DegreeDistribution = field(default=PAPER_DISTRIBUTION)

    def __post_init__(self):
        object.__setattr__(self, "sweep_values", tuple(self.sweep_values))
        if self.sweep_kind not in SWEEP_KINDS:
            raise ConfigError(f"sweep kind must be one of {SWEEP_KINDS}, got {self.sweep_kind!r}")
        if not self.sweep_values:
            raise ConfigError("sweep_values is empty")
        if list(self.sweep_values) != sorted(self.sweep_values):
            raise ConfigError("sweep_values must be sorted ascending")
        if self.frames_per_point < 1:
            raise ConfigError(f"frames per point must be >= 1, got {self.frames_per_point}")
        if not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must fit in 64 unsigned bits, got {self.seed}")
        if self.sweep_kind == "mmax":
            if any(int(v) != v or v < 0 for v in self.sweep_values):
                raise ConfigError("M_max sweep values must be non-negative integers")
            object.__setattr__(self, "sweep_values", tuple(int(v) for v in self.sweep_values))
        elif self.m_max < 0:
            raise ConfigError(f"m_max must be >= 0, got {self.m_max}")
        for value in self.sweep_values:
            if self.timing(value).n_i < 1:
                raise ConfigError(f"frame at sweep point {value} is shorter than one CSA slot")

    def timing(self, value) -> TimingConfig:
        """Frame geometry at one sweep point."""
        if self.sweep_kind == "mmax":
            return TimingConfig(self.t_frame, self.tau_c, self.tau_t, self.tau_i, int(value))
        return TimingConfig(float(value), self.tau_c, self.tau_t, self.tau_i, self.m_max)

    def vehicles(self, value) -> int:
        return int(value) if self.sweep_kind == "mmax" else self.m_max


@dataclass(frozen=True)
class SweepRow:
    sweep_value: float
    scheme: str
    mean_throughput: float
    std_error: float
    frames: int
    seed: int
    n_c: int
    n_i: int
    feasible: bool


@dataclass
class SweepReport:
    spec: SweepSpec | None = None
    rows: list[SweepRow] = field(default_factory=list)

    def rows_for(self, scheme: str) -> list[SweepRow]:
        return [r for r in self.rows if r.scheme == scheme]

    def point(self, sweep_value) -> dict[str, SweepRow]:
        return {r.scheme: r for r in self.rows if r.sweep_value == sweep_value}


def frame_rng(seed: int, point: int, scheme: str, frame: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(point, _SCHEME_CODE[scheme], frame))
    return np.random.default_rng(ss)


def _summarise(successes: list[int]) -> tuple[float, float]:
    x = np.asarray(successes, dtype=float)
    if len(x) < 2:
        return float(x.mean()), 0.0
    return float(x.mean()), float(x.std(ddof=1) / math.sqrt(len(x)))


def simulate_point(spec: SweepSpec, index: int, value) -> list[SweepRow]:
    """RTS-TDMA and CSA rows for one sweep point, RTS-TDMA first."""
    cfg = spec.timing(value)
    m = spec.vehicles(value)
    frames = spec.frames_per_point
    common = dict(sweep_value=value, seed=spec.seed, n_c=cfg.n_c, n_i=cfg.n_i)

    if cfg.feasible:
        rts = [run_frame_rts(m, cfg, spec.dist, frame_rng(spec.seed, index, RTS_TDMA, k)).successes
               for k in range(frames)]
        mean, se = _summarise(rts)
        rts_row = SweepRow(scheme=RTS_TDMA, mean_throughput=mean, std_error=se,
                           frames=frames, feasible=True, **common)
    else:
        rts_row = SweepRow(scheme=RTS_TDMA, mean_throughput=0.0, std_error=0.0,
                           frames=0, feasible=False, **common)

    csa = [run_frame_csa(m, cfg.n_i, spec.dist, frame_rng(spec.seed, index, CSA, k)).successes
           for k in range(frames)]
    mean, se = _summarise(csa)
    csa_row = SweepRow(scheme=CSA, mean_throughput=mean, std_error=se,
                       frames=frames, feasible=True, **common)
    return [rts_row, csa_row]


def run_sweep(spec: SweepSpec) -> SweepReport:
    report = SweepReport(spec)
    for index, value in enumerate(spec.sweep_values):
        rows = simulate_point(spec, index, value)
        log.info("%s=%s rts=%.3f csa=%.3f", spec.sweep_kind, value,
                 rows[0].mean_throughput, rows[1].mean_throughput)
        report.rows.extend(rows)
    return report


def sweep_mmax(spec: SweepSpec) -> SweepReport:
    if spec.sweep_kind != "mmax":
        raise ConfigError(f"expected an mmax sweep, got {spec.sweep_kind!r}")
    return run_sweep(spec)


def sweep_tframe(spec: SweepSpec) -> SweepReport:
    if spec.sweep_kind != "tframe":
        raise ConfigError(f"expected a tframe sweep, got {spec.sweep_kind!r}")
    return run_sweep(spec)


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, str):
        return x
    return f"{x:.6g}"


def report_to_csv(report: SweepReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in report.rows:
        writer.writerow([_fmt(getattr(r, name)) for name in CSV_HEADER])
    return buf.getvalue()


def write_csv(report: SweepReport, destination) -> None:
    """Write ``report`` to ``destination``; raises ``OSError`` if unwritable."""
    Path(destination).write_text(report_to_csv(report))


def read_csv(source) -> list[SweepRow]:
    """Parse a file written by :func:`write_csv` back into rows."""
    rows = []
    with open(source, newline="") as fh:
        for rec in csv.DictReader(fh):
            rows.append(SweepRow(
                sweep_value=float(rec["sweep_value"]),
                scheme=rec["scheme"],
                mean_throughput=float(rec["mean_throughput"]),
                std_error=float(rec["std_error"]),
                frames=int(rec["frames"]),
                seed=int(rec["seed"]),
                n_c=int(rec["n_c"]),
                n_i=int(rec["n_i"]),
                feasible=rec["feasible"] == "true",
            ))
    return rows


def parse_values(text: str) -> tuple:
    """``"50,100,150"`` or inclusive range ``"75:120:5"``."""
    text = text.strip()

    def num(s):
        s = s.strip()
        return int(s) if s.lstrip("+-").isdigit() else float(s)

    try:
        if ":" in text:
            parts = [num(p) for p in text.split(":")]
            if len(parts) not in (2, 3):
                raise ValueError(text)
            start, stop = parts[0], parts[1]
            step = parts[2] if len(parts) == 3 else 1
            if step <= 0:
                raise ValueError(text)
            count = math.floor((stop - start) / step + 1e-9) + 1
            return tuple(start + k * step for k in range(max(count, 0)))
        return tuple(num(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise ConfigError(f"cannot parse sweep values {text!r}") from None


_CASTS = {
    "sweep": str,
    "sweep_values": parse_values,
    "t_frame_ms": float,
    "tau_c_ms": float,
    "tau_t_ms": float,
    "tau_i_ms": float,
    "m_max": int,
    "distribution": str,
    "max_degree": int,
    "frames": int,
    "seed": int,
}


def parse_config_text(text: str, sweep_kind: str | None = None) -> SweepSpec:
    """Build a :class:`SweepSpec` from ``key = value`` lines.

    Missing keys take the Example-1 defaults in :data:`DEFAULTS`; unknown
    keys are rejected.  ``sweep_kind`` (from the CLI subcommand) must agree
    with a ``sweep`` key if the file has one.
    """
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip().strip('"').strip("'")
        if not sep or not key:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        if key not in _CASTS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        try:
            values[key] = _CASTS[key](value)
        except ConfigError:
            raise
        except ValueError:
            raise ConfigError(f"line {lineno}: bad value for {key}: {value!r}") from None

    kind = values.get("sweep", sweep_kind or "mmax")
    if sweep_kind is not None and kind != sweep_kind:
        raise ConfigError(f"config declares sweep={kind!r} but {sweep_kind!r} was requested")

    opt = {**DEFAULTS, **values}
    try:
        dist = parse_distribution(opt["distribution"], max_degree=opt["max_degree"])
    except DistributionError as exc:
        raise ConfigError(f"invalid distribution: {exc}") from exc
    return SweepSpec(
        sweep_kind=kind,
        sweep_values=values.get("sweep_values", DEFAULT_SWEEP_VALUES.get(kind, ())),
        t_frame=opt["t_frame_ms"],
        tau_c=opt["tau_c_ms"],
        tau_t=opt["tau_t_ms"],
        tau_i=opt["tau_i_ms"],
        m_max=opt["m_max"],
        frames_per_point=opt["frames"],
        seed=opt["seed"],
        dist=dist,
    )


def parse_config(source, sweep_kind: str | None = None) -> SweepSpec:
    """Read a config file; see :func:`parse_config_text` for the format."""
    return parse_config_text(Path(source).read_text(), sweep_kind)


def example1_spec(values: Iterable[int] = DEFAULT_SWEEP_VALUES["mmax"], frames: int = 500,
                  seed: int = 1) -> SweepSpec:
    return SweepSpec("mmax", tuple(values), frames_per_point=frames, seed=seed)


def example2_spec(values: Iterable[float] = DEFAULT_SWEEP_VALUES["tframe"], frames: int = 500,
                  seed: int = 1, m_max: int = 150) -> SweepSpec:
    return SweepSpec("tframe", tuple(values), m_max=m_max, frames_per_point=frames, seed=seed)
