"""Repetition-rate (degree) distributions.

Each contending vehicle draws the number of copies ``l`` of its request
packet from a law ``{Lambda_l}``.  Distributions are stored as explicit
``(degree, probability)`` pairs in ascending degree order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .exceptions import DistributionError

MAX_DEGREE = 8
MASS_TOLERANCE = 1e-9


@dataclass(frozen=True)
class DegreeDistribution:
    """Probability law over the number of request copies.

    Construction does not validate; call :func:`validate` (or build the
    object with :func:`parse_distribution`) before sampling.
    """

    entries: tuple[tuple[int, float], ...]
    max_degree: int = MAX_DEGREE

    def __init__(self, entries: Iterable[tuple[int, float]], max_degree: int = MAX_DEGREE):
        pairs = tuple(sorted((int(d), float(p)) for d, p in entries))
        object.__setattr__(self, "entries", pairs)
        object.__setattr__(self, "max_degree", int(max_degree))

    @property
    def degrees(self) -> np.ndarray:
        return np.array([d for d, _ in self.entries], dtype=np.int64)

    @property
    def probabilities(self) -> np.ndarray:
        return np.array([p for _, p in self.entries], dtype=float)

    def __str__(self) -> str:
        return ",".join(f"{d}:{p:g}" for d, p in self.entries)


def validate(dist: DegreeDistribution) -> DegreeDistribution:
    """Check every invariant of ``dist`` and return it unchanged.

    Raises :class:`DistributionError` naming the first violated invariant.
    """
    if not dist.entries:
        raise DistributionError("empty", "distribution has no entries")
    seen = set()
    for degree, prob in dist.entries:
        if degree in seen:
            raise DistributionError("duplicate-degree", f"degree {degree} listed twice")
        seen.add(degree)
        if not 1 <= degree <= dist.max_degree:
            raise DistributionError(
                "degree-out-of-range", f"degree {degree} not in [1, {dist.max_degree}]"
            )
        if not (prob > 0.0) or not math.isfinite(prob):
            raise DistributionError("non-positive-probability", f"P({degree}) = {prob}")
    total = math.fsum(p for _, p in dist.entries)
    if abs(total - 1.0) > MASS_TOLERANCE:
        raise DistributionError("non-unit-mass", f"probabilities sum to {total!r}")
    return dist


def parse_distribution(text: str, max_degree: int = MAX_DEGREE) -> DegreeDistribution:
    """Parse ``"2:0.5,3:0.28,8:0.22"`` into a validated distribution."""
    entries = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        degree, sep, prob = chunk.partition(":")
        if not sep:
            raise DistributionError("syntax", f"expected 'degree:probability', got {chunk!r}")
        try:
            entries.append((int(degree), float(prob)))
        except ValueError:
            raise DistributionError("syntax", f"cannot parse {chunk!r}") from None
    return validate(DegreeDistribution(entries, max_degree=max_degree))


def mean_degree(dist: DegreeDistribution) -> float:
    """Average number of copies a vehicle sends per frame."""
    return math.fsum(d * p for d, p in dist.entries)


def _cdf(dist: DegreeDistribution) -> np.ndarray:
    return np.cumsum(dist.probabilities)


def sample_degrees(dist: DegreeDistribution, rng: np.random.Generator, size: int) -> np.ndarray:
    """Draw ``size`` degrees by inverse-CDF over ascending degrees."""
    u = rng.random(size)
    idx = np.searchsorted(_cdf(dist), u, side="right")
    # cumsum may land a hair below 1.0
    np.minimum(idx, len(dist.entries) - 1, out=idx)
    return dist.degrees[idx]


def sample_degree(dist: DegreeDistribution, rng: np.random.Generator) -> int:
    return int(sample_degrees(dist, rng, 1)[0])


#: Lambda(x) = 0.5 x^2 + 0.28 x^3 + 0.22 x^8, the optimised IRSA law with max degree 8.
PAPER_DISTRIBUTION = validate(DegreeDistribution([(2, 0.5), (3, 0.28), (8, 0.22)]))
