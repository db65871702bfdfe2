"""Executable registry of the e*-topological ring theorems.

Each entry sweeps its quantifiers exhaustively (every subset, every element,
every unit) on one structure after gating on the theorem's hypotheses.
Check ids are a stable public contract.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

from .analyzer import (CheckReport, Status, TopoRingStructure, is_continuous_at,
                       is_kind_ring, preimage_failure)
from .operators import (DeltaMode, FamilyKind, delta_closure, delta_interior, family,
                        family_set, gen_closure, gen_interior)
from .ring import is_homomorphism, set_add, set_mul, set_neg
from .space import bits, check_sweep

AS_STATED = "as-stated"
AS_PROVED = "as-proved"
VARIANTS = (AS_STATED, AS_PROVED)

Witness = dict[str, int]


class UnknownCheck(KeyError):
    pass


@dataclass(frozen=True)
class HomContext:
    """A ring map out of the checked structure together with its target."""

    target: TopoRingStructure
    map: tuple[int, ...]


class _Ops:
    """Per-structure lookup tables for every operator the theorems use."""

    def __init__(self, s: TopoRingStructure, mode: DeltaMode, hom: HomContext | None):
        self.s, self.mode, self.hom = s, mode, hom
        self.r, self.t = s.ring, s.topology
        self.n = s.n
        self.subsets = range(1 << self.n)
        self.points = range(self.n)

    def _table(self, fn: Callable[[int], int]) -> tuple[int, ...]:
        return tuple(fn(a) for a in self.subsets)

    @cached_property
    def cl(self):
        return self._table(self.t.closure)

    @cached_property
    def int(self):
        return self._table(self.t.interior)

    @cached_property
    def dint(self):
        return self._table(lambda a: delta_interior(self.t, a))

    @cached_property
    def dcl(self):
        return self._table(lambda a: delta_closure(self.t, a, self.mode))

    @cached_property
    def eint(self):
        return self._table(lambda a: gen_interior(self.t, FamilyKind.ESTAR, a, self.mode))

    @cached_property
    def ecl(self):
        return self._table(lambda a: gen_closure(self.t, FamilyKind.ESTAR, a, self.mode))

    @cached_property
    def eopen(self) -> frozenset[int]:
        return family_set(self.t, FamilyKind.ESTAR, self.mode)

    @cached_property
    def eclosed(self) -> frozenset[int]:
        return family_set(self.t, FamilyKind.ESTAR_CLOSED, self.mode)

    @cached_property
    def neg(self):
        return self._table(lambda a: set_neg(self.r, a))

    @cached_property
    def tr(self):
        return tuple(self._table(lambda a, x=x: set_add(self.r, 1 << x, a)) for x in self.points)

    @cached_property
    def lmul(self):
        """``lmul[r][A]`` is rA."""
        return tuple(self._table(lambda a, r=r: set_mul(self.r, 1 << r, a)) for r in self.points)

    @cached_property
    def rmul(self):
        """``rmul[r][A]`` is Ar."""
        return tuple(self._table(lambda a, r=r: set_mul(self.r, a, 1 << r)) for r in self.points)

    @property
    def opens(self):
        return self.t.opens

    @cached_property
    def closeds(self):
        return tuple(sorted(self.t.full & ~u for u in self.t.opens))

    @property
    def units(self) -> list[int]:
        return list(bits(self.r.units))

    def estar_continuity_failure(self, f: Sequence[int]) -> int | None:
        return preimage_failure(f, self.t, self.t, FamilyKind.ESTAR, self.mode)


def _first(found: Iterable[Witness]) -> Witness | None:
    return next(iter(found), None)


def _sub(a: int, b: int) -> bool:
    return a & ~b == 0


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    claim: str
    predicate: Callable[[_Ops, str], Witness | None]
    needs_estar: bool = True
    needs_unity: bool = False
    over_units: bool = False
    variants: tuple[str, ...] = ()
    existential: bool = False
    needs_hom: bool = False
    extra: Callable[[_Ops], dict] | None = field(default=None, compare=False)


REGISTRY: dict[str, TheoremCheck] = {}


def _register(check_id: str, claim: str, **kw):
    def deco(fn):
        if check_id in REGISTRY:
            raise ValueError(f"duplicate check id {check_id}")
        REGISTRY[check_id] = TheoremCheck(check_id, claim, fn, **kw)
        return fn
    return deco


# -- hierarchy ---------------------------------------------------------------------

@_register("R3.2", "beta-open sets are e*-open and beta-topological rings are e*-topological",
           needs_estar=False)
def _r32(o: _Ops, variant):
    for a in family(o.t, FamilyKind.BETA, o.mode, max_n=o.n):
        if a not in o.eopen:
            return {"A": a}
    if is_kind_ring(o.s, FamilyKind.BETA, o.mode) and not is_kind_ring(o.s, FamilyKind.ESTAR, o.mode):
        return {"A": o.t.full}
    return None


# -- translation, negation and closed sets ---------------------------------------------

@_register("T3.4a", "A open => -A is e*-open")
def _t34a(o, variant):
    return _first({"A": a} for a in o.opens if o.neg[a] not in o.eopen)


@_register("T3.4b", "A open, x in R => x+A is e*-open")
def _t34b(o, variant):
    return _first({"x": x, "A": a} for x in o.points for a in o.opens
                  if o.tr[x][a] not in o.eopen)


@_register("C3.5a", "A open => -A <= cl(int(delta-cl(-A)))")
def _c35a(o, variant):
    return _first({"A": a} for a in o.opens
                  if not _sub(o.neg[a], o.cl[o.int[o.dcl[o.neg[a]]]]))


@_register("C3.5b", "A open, x in R => x+A <= cl(int(delta-cl(x+A)))")
def _c35b(o, variant):
    return _first({"x": x, "A": a} for x in o.points for a in o.opens
                  if not _sub(o.tr[x][a], o.cl[o.int[o.dcl[o.tr[x][a]]]]))


@_register("T3.6a", "A closed => -A is e*-closed")
def _t36a(o, variant):
    return _first({"A": a} for a in o.closeds if o.neg[a] not in o.eclosed)


@_register("T3.6b", "A closed, x in R => x+A is e*-closed")
def _t36b(o, variant):
    return _first({"x": x, "A": a} for x in o.points for a in o.closeds
                  if o.tr[x][a] not in o.eclosed)


def _c37_inner(o: _Ops, b: int, variant: str) -> int:
    # the e*-closed characterization uses delta-int; the printed corollary uses int
    return o.dint[b] if variant == AS_PROVED else o.int[b]


@_register("C3.7a", "A closed => int(cl(int(-A))) <= -A [as-stated] / "
           "int(cl(delta-int(-A))) <= -A [as-proved]", variants=VARIANTS)
def _c37a(o, variant):
    return _first({"A": a} for a in o.closeds
                  if not _sub(o.int[o.cl[_c37_inner(o, o.neg[a], variant)]], o.neg[a]))


@_register("C3.7b", "A closed, x in R => int(cl(int(x+A))) <= x+A [as-stated] / "
           "int(cl(delta-int(x+A))) <= x+A [as-proved]", variants=VARIANTS)
def _c37b(o, variant):
    return _first({"x": x, "A": a} for x in o.points for a in o.closeds
                  if not _sub(o.int[o.cl[_c37_inner(o, o.tr[x][a], variant)]], o.tr[x][a]))


# -- continuity and units -----------------------------------------------------------

@_register("T4.1a", "y -> x+y is e*-continuous for every x")
def _t41a(o, variant):
    for x in o.points:
        v = o.estar_continuity_failure(o.r.add[x])
        if v is not None:
            return {"x": x, "V": v}
    return None


@_register("T4.1b", "x -> -x is e*-continuous")
def _t41b(o, variant):
    v = o.estar_continuity_failure(o.r.neg_table)
    return None if v is None else {"V": v}


@_register("T4.3a", "A open, r in R* => Ar is e*-open", needs_unity=True, over_units=True)
def _t43a(o, variant):
    return _first({"r": r, "A": a} for r in o.units for a in o.opens
                  if o.rmul[r][a] not in o.eopen)


@_register("T4.3b", "A open, r in R* => rA is e*-open", needs_unity=True, over_units=True)
def _t43b(o, variant):
    return _first({"r": r, "A": a} for r in o.units for a in o.opens
                  if o.lmul[r][a] not in o.eopen)


@_register("T4.4a", "A closed, r in R* => Ar is e*-closed", needs_unity=True, over_units=True)
def _t44a(o, variant):
    return _first({"r": r, "A": a} for r in o.units for a in o.closeds
                  if o.rmul[r][a] not in o.eclosed)


@_register("T4.4b", "A closed, r in R* => rA is e*-closed", needs_unity=True, over_units=True)
def _t44b(o, variant):
    return _first({"r": r, "A": a} for r in o.units for a in o.closeds
                  if o.lmul[r][a] not in o.eclosed)


@_register("T4.5a", "r e*-cl(A) <= cl(rA) for r in R", needs_unity=True)
def _t45a(o, variant):
    return _first({"r": r, "A": a} for r in o.points for a in o.subsets
                  if not _sub(o.lmul[r][o.ecl[a]], o.cl[o.lmul[r][a]]))


@_register("T4.5b", "int(rA) <= r e*-int(A) for r in R", needs_unity=True)
def _t45b(o, variant):
    return _first({"r": r, "A": a} for r in o.points for a in o.subsets
                  if not _sub(o.int[o.lmul[r][a]], o.lmul[r][o.eint[a]]))


@_register("T4.5c", "r int(A) <= e*-int(A) [as-stated] / e*-int(rA) [as-proved], r in R*",
           needs_unity=True, over_units=True, variants=VARIANTS)
def _t45c(o, variant):
    def target(r, a):
        return o.eint[o.lmul[r][a]] if variant == AS_PROVED else o.eint[a]
    return _first({"r": r, "A": a} for r in o.units for a in o.subsets
                  if not _sub(o.lmul[r][o.int[a]], target(r, a)))


@_register("T4.5d", "e*-cl(rA) <= r cl(A) for r in R*", needs_unity=True, over_units=True)
def _t45d(o, variant):
    return _first({"r": r, "A": a} for r in o.units for a in o.subsets
                  if not _sub(o.ecl[o.lmul[r][a]], o.lmul[r][o.cl[a]]))


@_register("T4.6", "x -> rx is e*-continuous for r in R*", needs_unity=True, over_units=True)
def _t46(o, variant):
    for r in o.units:
        v = o.estar_continuity_failure(o.r.mul[r])
        if v is not None:
            return {"r": r, "V": v}
    return None


# -- translation and negation inclusions ----------------------------------------------

def _xa(claim_id, claim, test):
    @_register(claim_id, claim)
    def check(o, variant):
        return _first({"x": x, "A": a} for x in o.points for a in o.subsets
                      if not test(o, x, a, variant))
    return check


def _na(claim_id, claim, test):
    @_register(claim_id, claim)
    def check(o, variant):
        return _first({"A": a} for a in o.subsets if not test(o, a))
    return check


_xa("T4.7a", "x + e*-cl(A) <= cl(x+A)",
    lambda o, x, a, v: _sub(o.tr[x][o.ecl[a]], o.cl[o.tr[x][a]]))
_xa("T4.7b", "e*-cl(x+A) <= x + cl(A)",
    lambda o, x, a, v: _sub(o.ecl[o.tr[x][a]], o.tr[x][o.cl[a]]))
_xa("T4.7c", "x + int(A) <= e*-int(x+A)",
    lambda o, x, a, v: _sub(o.tr[x][o.int[a]], o.eint[o.tr[x][a]]))
_xa("T4.7d", "int(x+A) <= x + e*-int(A)",
    lambda o, x, a, v: _sub(o.int[o.tr[x][a]], o.tr[x][o.eint[a]]))

_na("T4.8a", "-e*-cl(A) <= cl(-A)", lambda o, a: _sub(o.neg[o.ecl[a]], o.cl[o.neg[a]]))
_na("T4.8b", "e*-cl(-A) <= -cl(A)", lambda o, a: _sub(o.ecl[o.neg[a]], o.neg[o.cl[a]]))
_na("T4.8c", "-int(A) <= e*-int(-A)", lambda o, a: _sub(o.neg[o.int[a]], o.eint[o.neg[a]]))
_na("T4.8d", "int(-A) <= -e*-int(A)", lambda o, a: _sub(o.int[o.neg[a]], o.neg[o.eint[a]]))

_xa("T4.9a", "x + int(cl(delta-int(A))) <= cl(x+A)",
    lambda o, x, a, v: _sub(o.tr[x][o.int[o.cl[o.dint[a]]]], o.cl[o.tr[x][a]]))
_xa("T4.9b", "int(cl(delta-int(x+A))) <= x + cl(A)",
    lambda o, x, a, v: _sub(o.int[o.cl[o.dint[o.tr[x][a]]]], o.tr[x][o.cl[a]]))
_xa("T4.9c", "x + int(A) <= cl(int(delta-cl(x+A)))",
    lambda o, x, a, v: _sub(o.tr[x][o.int[a]], o.cl[o.int[o.dcl[o.tr[x][a]]]]))


@_register("T4.9d", "int(x+A) <= x + cl(delta-cl(A)) [as-stated] / "
           "x + cl(int(delta-cl(A))) [as-proved]", variants=VARIANTS)
def _t49d(o, variant):
    def inner(a):
        return o.cl[o.int[o.dcl[a]]] if variant == AS_PROVED else o.cl[o.dcl[a]]
    return _first({"x": x, "A": a} for x in o.points for a in o.subsets
                  if not _sub(o.int[o.tr[x][a]], o.tr[x][inner(a)]))


_na("T4.10a", "-int(cl(delta-int(A))) <= cl(-A)",
    lambda o, a: _sub(o.neg[o.int[o.cl[o.dint[a]]]], o.cl[o.neg[a]]))
_na("T4.10b", "int(cl(delta-int(-A))) <= -cl(A)",
    lambda o, a: _sub(o.int[o.cl[o.dint[o.neg[a]]]], o.neg[o.cl[a]]))
_na("T4.10c", "-int(A) <= cl(int(delta-cl(-A)))",
    lambda o, a: _sub(o.neg[o.int[a]], o.cl[o.int[o.dcl[o.neg[a]]]]))
_na("T4.10d", "int(-A) <= -cl(int(delta-cl(A)))",
    lambda o, a: _sub(o.int[o.neg[a]], o.neg[o.cl[o.int[o.dcl[a]]]]))


# -- sums of closures ------------------------------------------------------------------

def _converse_at(o: _Ops, a: int, b: int) -> bool:
    return not _sub(o.cl[set_add(o.r, a, b)], set_add(o.r, o.ecl[a], o.ecl[b]))


def _converse_pairs(o: _Ops) -> Iterator[tuple[int, int]]:
    return ((a, b) for a in o.subsets for b in o.subsets if _converse_at(o, a, b))


def t411_converse_at(s: TopoRingStructure, a: int, b: int,
                     mode: DeltaMode | str = DeltaMode.STANDARD) -> bool:
    """True when cl(A+B) is NOT inside e*-cl(A) + e*-cl(B)."""
    s.ground.check(a), s.ground.check(b)
    return _converse_at(_Ops(s, DeltaMode(mode), None), a, b)


@_register("T4.11", "e*-cl(A) + e*-cl(B) <= cl(A+B)")
def _t411(o, variant):
    return _first({"A": a, "B": b} for a in o.subsets for b in o.subsets
                  if not _sub(set_add(o.r, o.ecl[a], o.ecl[b]), o.cl[set_add(o.r, a, b)]))


@_register("T4.11-converse", "some A, B have cl(A+B) not inside e*-cl(A) + e*-cl(B)",
           existential=True,
           extra=lambda o: {"pairs": [[a, b] for a, b in _converse_pairs(o)]})
def _t411c(o, variant):
    return _first({"A": a, "B": b} for a, b in _converse_pairs(o))


# -- homomorphisms ---------------------------------------------------------------------

@_register("T4.14", "a ring homomorphism into a topological ring that is continuous "
           "at 0 is e*-continuous", needs_hom=True)
def _t414(o, variant):
    h = o.hom
    v = preimage_failure(h.map, o.t, h.target.topology, FamilyKind.ESTAR, o.mode)
    return None if v is None else {"V": v}


def _hom_hypothesis(o: _Ops) -> str | None:
    h = o.hom
    if h is None:
        return "homomorphism and target structure supplied"
    ok, _ = is_homomorphism(h.map, o.r, h.target.ring)
    if not ok:
        return "f is a ring homomorphism"
    if not is_kind_ring(h.target, FamilyKind.OPEN, o.mode):
        return "target is a topological ring"
    if not is_continuous_at(h.map, o.t, h.target.topology, o.r.zero):
        return "f is continuous at 0_R"
    return None


# -- runner ------------------------------------------------------------------------------

def check_ids() -> list[str]:
    return list(REGISTRY)


def run_check(check_id: str, s: TopoRingStructure, variant: str = AS_STATED,
              mode: DeltaMode | str = DeltaMode.STANDARD, hom: HomContext | None = None,
              max_n: int | None = None, _ops: _Ops | None = None,
              _estar: bool | None = None) -> CheckReport:
    try:
        entry = REGISTRY[check_id]
    except KeyError:
        raise UnknownCheck(check_id) from None
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    mode = DeltaMode(mode)
    check_sweep(s.n, max_n)
    o = _ops or _Ops(s, mode, hom)
    report = CheckReport(entry.id, Status.PASS, kind=FamilyKind.ESTAR.value,
                         delta_mode=mode.value,
                         variant=variant if entry.variants else None, detail=entry.claim)

    if entry.needs_estar:
        estar = is_kind_ring(s, FamilyKind.ESTAR, mode) if _estar is None else _estar
        if not estar:
            report.status = Status.HYPOTHESIS_NOT_SATISFIED
            report.hypothesis = "e*-topological ring"
            return report
    if entry.needs_hom:
        missing = _hom_hypothesis(o)
        if missing:
            report.status = Status.HYPOTHESIS_NOT_SATISFIED
            report.hypothesis = missing
            return report

    witness = entry.predicate(o, variant)
    if entry.existential:
        # an existence claim holding elsewhere is not refuted by this structure
        status = Status.PASS
        report.evidence["found"] = witness is not None
    else:
        status = Status.FAIL if witness else Status.PASS
    if entry.extra is not None:
        report.evidence.update(entry.extra(o))

    if entry.needs_unity and not s.ring.has_unity:
        # the quantified clause is still reported as a facet
        report.status = Status.HYPOTHESIS_NOT_SATISFIED
        report.hypothesis = "ring with unity"
        report.evidence["clause"] = status.value
        report.evidence["vacuous"] = entry.over_units and s.ring.units == 0
        if witness:
            report.witness = witness
        return report

    report.status = status
    report.witness = witness
    return report


def run_all(s: TopoRingStructure, variant: str = "both",
            mode: DeltaMode | str = DeltaMode.STANDARD, hom: HomContext | None = None,
            ids: Sequence[str] | None = None, max_n: int | None = None) -> list[CheckReport]:
    """Run registry entries in registry order; ``variant='both'`` runs each
    variant-sensitive entry once per variant."""
    mode = DeltaMode(mode)
    check_sweep(s.n, max_n)
    wanted = list(REGISTRY) if ids is None else list(ids)
    for cid in wanted:
        if cid not in REGISTRY:
            raise UnknownCheck(cid)
    o = _Ops(s, mode, hom)
    estar = is_kind_ring(s, FamilyKind.ESTAR, mode)
    variants = VARIANTS if variant == "both" else (variant,)
    out = []
    for cid in wanted:
        entry = REGISTRY[cid]
        for v in (variants if entry.variants else variants[:1]):
            out.append(run_check(cid, s, v, mode, hom, max_n, _ops=o, _estar=estar))
    return out


def summarize(reports: Iterable[CheckReport]) -> dict[str, int]:
    counts = Counter(r.status.value for r in reports)
    return {st.value: counts.get(st.value, 0) for st in Status}


def hom_context(source: TopoRingStructure, target: TopoRingStructure,
                mapping: Sequence[int]) -> HomContext:
    """Bundle a map for T4.14, validating totality but not the hom laws (those
    are a hypothesis of the check)."""
    if len(mapping) != source.n or any(not 0 <= v < target.n for v in mapping):
        raise ValueError("map must send every source element into the target")
    return HomContext(target, tuple(mapping))

