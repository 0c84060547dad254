"""Successive interference cancellation over one contention access phase.

The RSU sees, for every mini-slot, the set of request copies that landed in
it.  A slot holding exactly one undecoded copy is clean: the vehicle ID is
read, the pointer reveals the vehicle's other copies, and those copies are
subtracted from their slots.  Cancellation is ideal, so this is plain
peeling on the vehicle/slot bipartite graph.

Within one pass, slots are scanned in ascending index order against the
live state, so the extraction order (and therefore the CTP slot order) is
deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .degree_dist import MAX_DEGREE
from .exceptions import MalformedInstanceError


@dataclass(frozen=True)
class RequestTransmission:
    """Mini-slots used by one vehicle's request copies (1-based indices)."""

    vehicle: int
    copy_slots: tuple[int, ...]

    def __init__(self, vehicle: int, copy_slots: Iterable[int]):
        object.__setattr__(self, "vehicle", int(vehicle))
        object.__setattr__(self, "copy_slots", tuple(int(s) for s in copy_slots))

    def pointer(self, slot: int) -> tuple[int, ...]:
        """Slots of the *other* copies, as carried inside the copy at ``slot``."""
        return tuple(s for s in self.copy_slots if s != slot)


@dataclass(frozen=True)
class CapInstance:
    n_c: int
    transmissions: tuple[RequestTransmission, ...] = ()
    max_degree: int = MAX_DEGREE

    def __init__(self, n_c: int, transmissions: Iterable[RequestTransmission] = (),
                 max_degree: int = MAX_DEGREE):
        object.__setattr__(self, "n_c", int(n_c))
        object.__setattr__(self, "transmissions", tuple(transmissions))
        object.__setattr__(self, "max_degree", int(max_degree))

    @classmethod
    def from_mapping(cls, n_c: int, slots_by_vehicle: dict, max_degree: int = MAX_DEGREE):
        """Build an instance from ``{vehicle: [slot, ...]}``."""
        return cls(
            n_c,
            [RequestTransmission(v, sorted(s)) for v, s in slots_by_vehicle.items()],
            max_degree=max_degree,
        )

    @property
    def vehicles(self) -> tuple[int, ...]:
        return tuple(t.vehicle for t in self.transmissions)

    def without(self, vehicle: int) -> "CapInstance":
        return CapInstance(
            self.n_c,
            [t for t in self.transmissions if t.vehicle != vehicle],
            max_degree=self.max_degree,
        )


@dataclass(frozen=True)
class DecodeOutcome:
    extracted: tuple[int, ...]
    iterations: int
    residual_slots: tuple[int, ...]
    undecoded: tuple[int, ...] = field(default=())


@dataclass(frozen=True)
class TraceStep:
    """One extraction: ``vehicle`` read from clean ``slot`` in pass ``iteration``."""

    iteration: int
    slot: int
    vehicle: int
    cancelled: tuple[int, ...]

    def format(self) -> str:
        cancelled = ",".join(str(s) for s in self.cancelled)
        return f"iter={self.iteration} slot={self.slot} vehicle={self.vehicle} cancelled={cancelled}"


def check_instance(cap: CapInstance) -> None:
    """Raise :class:`MalformedInstanceError` if ``cap`` breaks an invariant."""
    if cap.n_c < 1 and cap.transmissions:
        raise MalformedInstanceError(f"n_c must be >= 1, got {cap.n_c}")
    seen = set()
    for t in cap.transmissions:
        if t.vehicle < 1:
            raise MalformedInstanceError(f"vehicle id must be positive, got {t.vehicle}")
        if t.vehicle in seen:
            raise MalformedInstanceError(f"vehicle {t.vehicle} appears twice")
        seen.add(t.vehicle)
        slots = t.copy_slots
        if not 1 <= len(slots) <= cap.max_degree:
            raise MalformedInstanceError(
                f"vehicle {t.vehicle} has {len(slots)} copies, expected 1..{cap.max_degree}"
            )
        if any(b <= a for a, b in zip(slots, slots[1:])):
            raise MalformedInstanceError(f"vehicle {t.vehicle} slots not strictly increasing: {slots}")
        if slots[0] < 1 or slots[-1] > cap.n_c:
            raise MalformedInstanceError(f"vehicle {t.vehicle} slots outside [1, {cap.n_c}]: {slots}")


def _run(cap: CapInstance):
    check_instance(cap)
    copies = {t.vehicle: t.copy_slots for t in cap.transmissions}
    occupants: dict[int, set[int]] = {}
    for vehicle, slots in copies.items():
        for s in slots:
            occupants.setdefault(s, set()).add(vehicle)

    steps: list[TraceStep] = []
    remaining = len(copies)
    iterations = 0
    while remaining:
        iterations += 1
        progress = False
        for slot in sorted(occupants):
            members = occupants.get(slot)
            if members is None or len(members) != 1:
                continue
            (vehicle,) = members
            others = tuple(s for s in copies[vehicle] if s != slot)
            for s in copies[vehicle]:
                held = occupants[s]
                held.discard(vehicle)
                if not held:
                    del occupants[s]
            steps.append(TraceStep(iterations, slot, vehicle, others))
            remaining -= 1
            progress = True
        if not progress:
            break

    residual = tuple(sorted(occupants))
    extracted = tuple(step.vehicle for step in steps)
    done = set(extracted)
    undecoded = tuple(sorted(v for v in copies if v not in done))
    return steps, DecodeOutcome(extracted, iterations, residual, undecoded)


def peel(cap: CapInstance) -> DecodeOutcome:
    """Run SIC to its fixed point and return the extraction order."""
    return _run(cap)[1]


def decode_trace(cap: CapInstance) -> list[TraceStep]:
    """Per-extraction records of the same run :func:`peel` performs."""
    return _run(cap)[0]


def replay_trace(cap: CapInstance, trace: Sequence[TraceStep]) -> DecodeOutcome:
    """Rebuild a :class:`DecodeOutcome` from ``trace``.

    Every step is checked against the instance: the named slot must hold
    exactly that one undecoded copy when the step is applied.
    """
    check_instance(cap)
    copies = {t.vehicle: set(t.copy_slots) for t in cap.transmissions}
    occupants: dict[int, set[int]] = {}
    for vehicle, slots in copies.items():
        for s in slots:
            occupants.setdefault(s, set()).add(vehicle)
    for step in trace:
        if occupants.get(step.slot) != {step.vehicle}:
            raise MalformedInstanceError(f"slot {step.slot} is not clean for vehicle {step.vehicle}")
        if set(step.cancelled) != copies[step.vehicle] - {step.slot}:
            raise MalformedInstanceError(f"wrong cancellation set for vehicle {step.vehicle}")
        for s in copies[step.vehicle]:
            occupants[s].discard(step.vehicle)
            if not occupants[s]:
                del occupants[s]

    extracted = tuple(step.vehicle for step in trace)
    last = trace[-1].iteration if trace else 0
    # an unfinished run ends with one pass that found nothing
    iterations = last if len(extracted) == len(copies) else last + 1
    undecoded = tuple(sorted(v for v in copies if v not in set(extracted)))
    return DecodeOutcome(extracted, iterations, tuple(sorted(occupants)), undecoded)


def format_trace(cap: CapInstance) -> str:
    steps, outcome = _run(cap)
    lines = [step.format() for step in steps]
    lines.append("residual=" + ",".join(str(s) for s in outcome.residual_slots))
    return "\n".join(lines)


def parse_instance(text: str) -> CapInstance:
    """Parse an instance file.

    Format::

        n_c=8
        1: 3,5,6
        2: 1,3

    Blank lines and ``#`` comments are ignored.
    """
    n_c = None
    slots_by_vehicle: dict[int, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("n_c"):
                key, _, value = line.partition("=")
                if key.strip() != "n_c":
                    raise ValueError(line)
                n_c = int(value)
                continue
            vehicle, sep, slots = line.partition(":")
            if not sep:
                raise ValueError(line)
            vid = int(vehicle)
            if vid in slots_by_vehicle:
                raise MalformedInstanceError(f"line {lineno}: vehicle {vid} listed twice")
            slots_by_vehicle[vid] = [int(s) for s in slots.split(",") if s.strip()]
        except MalformedInstanceError:
            raise
        except ValueError:
            raise MalformedInstanceError(f"line {lineno}: cannot parse {raw!r}") from None
    if n_c is None:
        raise MalformedInstanceError("missing 'n_c=<n>' header")
    cap = CapInstance(n_c, [RequestTransmission(v, s) for v, s in slots_by_vehicle.items()])
    check_instance(cap)
    return cap
