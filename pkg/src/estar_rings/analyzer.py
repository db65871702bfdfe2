"""Classification of finite (R, +, *, tau) against a family of generalized opens.

A structure is an *F-topological ring* when addition, negation and
multiplication satisfy the neighbourhood conditions with witnesses ``U``,
``V`` drawn from family ``F``.  ``F = open`` is an ordinary topological ring,
``F = beta`` a beta-topological ring and ``F = estar`` an e*-topological ring.

Existential searches only look at inclusion-minimal members of ``F`` around
each point.  ``U + V <= W`` (and the other conditions) is antitone in ``U``
and ``V``, so this loses nothing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Sequence

from .operators import DeltaMode, FamilyKind, family, family_set
from .ring import FiniteRing, image, preimage, set_add, set_mul, set_neg
from .space import Topology, is_subset

CLASSIFY_KINDS = (FamilyKind.OPEN, FamilyKind.BETA, FamilyKind.ESTAR)


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    HYPOTHESIS_NOT_SATISFIED = "hypothesis-not-satisfied"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TopoRingStructure:
    ring: FiniteRing
    topology: Topology

    def __post_init__(self) -> None:
        if self.ring.ground != self.topology.ground:
            raise ValueError("ring and topology must share the same ground set")

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def ground(self):
        return self.ring.ground


@dataclass
class CheckReport:
    """Outcome of one quantified check.

    In ``witness`` lower-case keys hold element indices and upper-case keys
    hold subset masks.
    """

    check_id: str
    status: Status
    witness: dict[str, int] | None = None
    kind: str | None = None
    delta_mode: str = DeltaMode.STANDARD.value
    hypothesis: str | None = None
    variant: str | None = None
    detail: str = ""
    evidence: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    @property
    def failed(self) -> bool:
        return self.status is Status.FAIL


@lru_cache(maxsize=16384)
def minimal_members(t: Topology, kind: FamilyKind, mode: DeltaMode) -> tuple[tuple[int, ...], ...]:
    """For each point, the inclusion-minimal family members containing it."""
    fam = family(t, kind, mode, max_n=t.n)
    out = []
    for x in range(t.n):
        around = [u for u in fam if u >> x & 1]
        out.append(tuple(u for u in around
                         if not any(v != u and is_subset(v, u) for v in around)))
    return tuple(out)


def _report(check_id, kind, mode, witness=None, detail=""):
    return CheckReport(check_id, Status.FAIL if witness else Status.PASS, witness,
                       kind=FamilyKind(kind).value, delta_mode=DeltaMode(mode).value,
                       detail=detail)


def check_condition_add(s: TopoRingStructure, kind: FamilyKind | str,
                        mode: DeltaMode | str = DeltaMode.STANDARD) -> CheckReport:
    kind, mode = FamilyKind(kind), DeltaMode(mode)
    r, t = s.ring, s.topology
    mins = minimal_members(t, kind, mode)
    for x in range(r.n):
        for y in range(r.n):
            z = r.add[x][y]
            for w in t.opens_containing(z):
                if not any(is_subset(set_add(r, u, v), w) for u in mins[x] for v in mins[y]):
                    return _report(f"add[{kind}]", kind, mode, {"x": x, "y": y, "W": w},
                                   "no U, V with x in U, y in V and U+V inside W")
    return _report(f"add[{kind}]", kind, mode)


def check_condition_neg(s: TopoRingStructure, kind: FamilyKind | str,
                        mode: DeltaMode | str = DeltaMode.STANDARD) -> CheckReport:
    kind, mode = FamilyKind(kind), DeltaMode(mode)
    r, t = s.ring, s.topology
    mins = minimal_members(t, kind, mode)
    for x in range(r.n):
        for v in t.opens_containing(r.neg(x)):
            if not any(is_subset(set_neg(r, u), v) for u in mins[x]):
                return _report(f"neg[{kind}]", kind, mode, {"x": x, "V": v},
                               "no U with x in U and -U inside V")
    return _report(f"neg[{kind}]", kind, mode)


def check_condition_mul(s: TopoRingStructure, kind: FamilyKind | str,
                        mode: DeltaMode | str = DeltaMode.STANDARD) -> CheckReport:
    kind, mode = FamilyKind(kind), DeltaMode(mode)
    r, t = s.ring, s.topology
    mins = minimal_members(t, kind, mode)
    for x in range(r.n):
        for y in range(r.n):
            z = r.mul[x][y]
            for w in t.opens_containing(z):
                if not any(is_subset(set_mul(r, u, v), w) for u in mins[x] for v in mins[y]):
                    return _report(f"mul[{kind}]", kind, mode, {"x": x, "y": y, "W": w},
                                   "no U, V with x in U, y in V and UV inside W")
    return _report(f"mul[{kind}]", kind, mode)


CONDITIONS = (check_condition_add, check_condition_neg, check_condition_mul)


@dataclass
class Classification:
    kinds: dict[str, bool]
    reports: list[CheckReport]
    delta_mode: str

    def __getitem__(self, kind: FamilyKind | str) -> bool:
        return self.kinds[FamilyKind(kind).value]


def is_kind_ring(s: TopoRingStructure, kind: FamilyKind | str,
                 mode: DeltaMode | str = DeltaMode.STANDARD) -> bool:
    return all(c(s, kind, mode).passed for c in CONDITIONS)


def classify(s: TopoRingStructure, mode: DeltaMode | str = DeltaMode.STANDARD,
             kinds: Sequence[FamilyKind | str] = CLASSIFY_KINDS) -> Classification:
    mode = DeltaMode(mode)
    reports, verdict = [], {}
    for kind in kinds:
        kind = FamilyKind(kind)
        rs = [c(s, kind, mode) for c in CONDITIONS]
        reports.extend(rs)
        verdict[kind.value] = all(r.passed for r in rs)
    return Classification(verdict, reports, mode.value)


def replay_failure(s: TopoRingStructure, report: CheckReport) -> bool:
    """Re-check a fail witness against the raw definition (every family member,
    no pruning).  True when the failure is reproduced."""
    w = report.witness
    if report.status is not Status.FAIL or not w:
        return False
    r, t = s.ring, s.topology
    fam = family(t, report.kind, report.delta_mode, max_n=t.n)
    op = report.check_id.split("[", 1)[0]
    if op == "neg":
        x, v = w["x"], w["V"]
        if not (t.is_open(v) and v >> r.neg(x) & 1):
            return False
        return not any(u >> x & 1 and is_subset(set_neg(r, u), v) for u in fam)
    x, y, big_w = w["x"], w["y"], w["W"]
    table, setop = (r.add, set_add) if op == "add" else (r.mul, set_mul)
    if not (t.is_open(big_w) and big_w >> table[x][y] & 1):
        return False
    us = [u for u in fam if u >> x & 1]
    vs = [v for v in fam if v >> y & 1]
    return not any(is_subset(setop(r, u, v), big_w) for u in us for v in vs)


# -- continuity ------------------------------------------------------------------

def preimage_failure(f: Sequence[int], tx: Topology, ty: Topology, kind: FamilyKind | str,
                     mode: DeltaMode | str = DeltaMode.STANDARD) -> int | None:
    """First open set of ``ty`` whose preimage is not in ``kind`` on ``tx``."""
    members = family_set(tx, FamilyKind(kind), DeltaMode(mode))
    for v in ty.opens:
        if preimage(f, v) not in members:
            return v
    return None


def is_gen_continuous_preimage(f: Sequence[int], tx: Topology, ty: Topology,
                               kind: FamilyKind | str,
                               mode: DeltaMode | str = DeltaMode.STANDARD) -> bool:
    return preimage_failure(f, tx, ty, kind, mode) is None


def is_gen_continuous_pointwise(f: Sequence[int], tx: Topology, ty: Topology,
                                kind: FamilyKind | str,
                                mode: DeltaMode | str = DeltaMode.STANDARD) -> bool:
    mins = minimal_members(tx, FamilyKind(kind), DeltaMode(mode))
    for x in range(tx.n):
        for v in ty.opens_containing(f[x]):
            if not any(is_subset(image(f, u), v) for u in mins[x]):
                return False
    return True


def is_continuous_at(f: Sequence[int], tx: Topology, ty: Topology, x: int) -> bool:
    # the minimal open neighbourhood of x is the best candidate U
    fu = image(f, tx.neighborhoods[x])
    return all(is_subset(fu, v) for v in ty.opens_containing(f[x]))
