"""Validity of ortho-radial representations with certificates."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Sequence

from .cycles import (
    DEFAULT_MAX_CYCLES,
    CycleLabeling,
    EssentialCycle,
    enumerate_essential_cycles,
    labeling,
)
from .errors import CycleLimitExceeded
from .representation import EXPECTED_FACE_ROTATION, OrthoRadialRepresentation

DEFAULT_CERTIFICATES = 10


class MonotoneKind(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"


class CycleClass(enum.Enum):
    ALL_ZERO = "all-zero"
    MIXED = "mixed"
    INCREASING = "increasing"
    DECREASING = "decreasing"

    @property
    def monotone(self) -> bool:
        return self in (CycleClass.INCREASING, CycleClass.DECREASING)

    @property
    def kind(self) -> MonotoneKind | None:
        if self is CycleClass.INCREASING:
            return MonotoneKind.INCREASING
        if self is CycleClass.DECREASING:
            return MonotoneKind.DECREASING
        return None


class Status(enum.Enum):
    VALID = "valid"
    INVALID = "invalid"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class MonotoneCertificate:
    cycle: EssentialCycle
    kind: MonotoneKind
    labeling: CycleLabeling


@dataclass
class ValidityReport:
    cond1_violations: list[tuple[str, int]] = field(default_factory=list)
    cond2_violations: list[tuple[int, int, int]] = field(default_factory=list)
    monotone_cycles: list[MonotoneCertificate] = field(default_factory=list)
    status: Status = Status.VALID
    cycles_checked: int = 0
    message: str = ""

    @property
    def valid(self) -> bool:
        return self.status is Status.VALID

    @property
    def inconclusive(self) -> bool:
        return self.status is Status.INCONCLUSIVE


def check_condition1(rep: OrthoRadialRepresentation) -> list[tuple[str, int]]:
    """Vertices whose angles do not add up to 360."""
    out = []
    for v in rep.graph.vertices:
        total = rep.angle_sum(v)
        if total != 360:
            out.append((v, total))
    return out


def check_condition2(rep: OrthoRadialRepresentation) -> list[tuple[int, int, int]]:
    """Faces whose rotation differs from the value required by their kind."""
    out = []
    for f in rep.graph.faces:
        r = rep.face_rotation(f.id)
        expected = EXPECTED_FACE_ROTATION[f.kind]
        if r != expected:
            out.append((f.id, r, expected))
    return out


def classify_labels(values: Sequence[int]) -> CycleClass:
    if all(x == 0 for x in values):
        return CycleClass.ALL_ZERO
    if all(x >= 0 for x in values):
        return CycleClass.DECREASING
    if all(x <= 0 for x in values):
        return CycleClass.INCREASING
    return CycleClass.MIXED


def classify_cycle(lab: CycleLabeling) -> CycleClass:
    return classify_labels(lab.values)


def validate(
    rep: OrthoRadialRepresentation,
    max_cycles: int | None = DEFAULT_MAX_CYCLES,
    certificates: int = DEFAULT_CERTIFICATES,
    rng: random.Random | None = None,
    cycles: Sequence[EssentialCycle] | None = None,
) -> ValidityReport:
    """Check the angle sums, the face rotations and the absence of monotone cycles.

    The cycle search only runs when the first two checks pass.  It stops after
    ``certificates`` monotone cycles.  If the essential cycles cannot be
    enumerated within ``max_cycles`` the status is ``INCONCLUSIVE``.
    """
    report = ValidityReport()
    report.cond1_violations = check_condition1(rep)
    report.cond2_violations = check_condition2(rep)
    if report.cond1_violations or report.cond2_violations:
        report.status = Status.INVALID
        return report
    if cycles is None:
        try:
            cycles = enumerate_essential_cycles(rep.graph, max_cycles)
        except CycleLimitExceeded as exc:
            report.status = Status.INCONCLUSIVE
            report.message = str(exc)
            return report
    for cyc in cycles:
        report.cycles_checked += 1
        lab = labeling(rep, cyc, rng=rng)
        cls = classify_cycle(lab)
        if cls.monotone:
            report.monotone_cycles.append(MonotoneCertificate(cyc, cls.kind, lab))
            if len(report.monotone_cycles) >= max(certificates, 1):
                break
    if report.monotone_cycles:
        report.status = Status.INVALID
    return report


def is_valid(rep: OrthoRadialRepresentation, max_cycles: int | None = DEFAULT_MAX_CYCLES) -> bool:
    return validate(rep, max_cycles=max_cycles, certificates=1).valid
