"""Frame-level simulator and closed-form analysis for RTS-TDMA vs. coded slotted ALOHA."""

from .analytic import (
    CriticalPoints,
    critical_load,
    critical_mmax,
    critical_points,
    critical_tframe,
    mini_slot_count,
    mmax_threshold,
    slot_ratio,
)
from .csa import CsaConfig, csa_frame
from .degree_dist import (
    PAPER_DISTRIBUTION,
    DegreeDistribution,
    mean_degree,
    parse_distribution,
    sample_degree,
    sample_degrees,
    validate,
)
from .exceptions import (
    ConfigError,
    DegenerateTimingError,
    DistributionError,
    InfeasibleConfigError,
    MalformedInstanceError,
    RtsTdmaError,
)
from .harness import (
    SweepReport,
    SweepRow,
    SweepSpec,
    parse_config,
    run_sweep,
    sweep_mmax,
    sweep_tframe,
    write_csv,
)
from .protocol import FrameResult, assign_slots, run_cap, run_frame_csa, run_frame_rts
from .sic import CapInstance, DecodeOutcome, RequestTransmission, TraceStep, decode_trace, peel
from .timing import TimingConfig

__version__ = "0.1.0"
