"""Generalized open sets: regular, delta, alpha/semi/pre/beta and e*-open.

Every family is computed by a full sweep over the 2^n subsets of the ground
set and returned in ascending mask order.  Sweeps are cached per topology.
"""

from __future__ import annotations

import enum
from functools import lru_cache

from .space import Topology, check_sweep, is_subset


class FamilyKind(str, enum.Enum):
    OPEN = "open"
    CLOSED = "closed"
    REGULAR_OPEN = "regular-open"
    REGULAR_CLOSED = "regular-closed"
    DELTA_OPEN = "delta-open"
    DELTA_CLOSED = "delta-closed"
    ALPHA = "alpha"
    SEMI = "semi"
    PRE = "pre"
    BETA = "beta"
    ESTAR = "estar"
    ESTAR_CLOSED = "estar-closed"

    def __str__(self) -> str:
        return self.value


class DeltaMode(str, enum.Enum):
    """How delta-closure is computed.

    ``STANDARD`` is closure in the semiregularization (every regular open
    neighbourhood of the point meets the set).  ``PAPER_LITERAL`` intersects
    the regular-closed supersets.
    """

    STANDARD = "standard"
    PAPER_LITERAL = "paper-literal"

    def __str__(self) -> str:
        return self.value


def _kind(kind: FamilyKind | str) -> FamilyKind:
    return FamilyKind(kind)


def _mode(mode: DeltaMode | str) -> DeltaMode:
    return DeltaMode(mode)


# -- regular and delta -------------------------------------------------------

def is_regular_open(t: Topology, a: int) -> bool:
    return t.interior(t.closure(a)) == a


def is_regular_closed(t: Topology, a: int) -> bool:
    return t.closure(t.interior(a)) == a


@lru_cache(maxsize=4096)
def _regular_open(t: Topology) -> tuple[int, ...]:
    # int(cl(.)) is idempotent, so its image is exactly RO(X)
    return tuple(sorted({t.interior(t.closure(a)) for a in t.ground.subsets()}))


def regular_open_family(t: Topology) -> list[int]:
    return list(_regular_open(t))


def regular_closed_family(t: Topology) -> list[int]:
    return sorted(t.full & ~u for u in _regular_open(t))


@lru_cache(maxsize=4096)
def _semiregular_nbhds(t: Topology) -> tuple[int, ...]:
    """Smallest regular open set around each point (RO(X) is meet-closed)."""
    out = []
    ro = _regular_open(t)
    for x in range(t.n):
        nb = t.full
        for u in ro:
            if u >> x & 1:
                nb &= u
        out.append(nb)
    return tuple(out)


def delta_interior(t: Topology, a: int) -> int:
    t.ground.check(a)
    out = 0
    for u in _regular_open(t):
        if is_subset(u, a):
            out |= u
    return out


def is_delta_open(t: Topology, a: int) -> bool:
    return delta_interior(t, a) == a


def delta_closure(t: Topology, a: int, mode: DeltaMode | str = DeltaMode.STANDARD) -> int:
    t.ground.check(a)
    if _mode(mode) is DeltaMode.STANDARD:
        out = 0
        for x, nb in enumerate(_semiregular_nbhds(t)):
            if nb & a:
                out |= 1 << x
        return out
    out = t.full
    for u in _regular_open(t):
        c = t.full & ~u
        if is_subset(a, c):
            out &= c
    return out


# -- families ------------------------------------------------------------------

def _predicate(t: Topology, kind: FamilyKind, mode: DeltaMode):
    cl, int_ = t.closure, t.interior
    if kind is FamilyKind.ALPHA:
        return lambda a: is_subset(a, int_(cl(int_(a))))
    if kind is FamilyKind.SEMI:
        return lambda a: is_subset(a, cl(int_(a)))
    if kind is FamilyKind.PRE:
        return lambda a: is_subset(a, int_(cl(a)))
    if kind is FamilyKind.BETA:
        return lambda a: is_subset(a, cl(int_(cl(a))))
    if kind is FamilyKind.ESTAR:
        return lambda a: is_subset(a, cl(int_(delta_closure(t, a, mode))))
    raise AssertionError(kind)


@lru_cache(maxsize=16384)
def _family(t: Topology, kind: FamilyKind, mode: DeltaMode) -> tuple[int, ...]:
    full = t.full
    if kind is FamilyKind.OPEN:
        return t.opens
    if kind is FamilyKind.CLOSED:
        return tuple(sorted(full & ~u for u in t.opens))
    if kind is FamilyKind.REGULAR_OPEN:
        return _regular_open(t)
    if kind is FamilyKind.REGULAR_CLOSED:
        return tuple(regular_closed_family(t))
    if kind is FamilyKind.DELTA_OPEN:
        return tuple(a for a in t.ground.subsets() if is_delta_open(t, a))
    if kind is FamilyKind.DELTA_CLOSED:
        return tuple(sorted(full & ~u for u in _family(t, FamilyKind.DELTA_OPEN, mode)))
    if kind is FamilyKind.ESTAR_CLOSED:
        return tuple(sorted(full & ~u for u in _family(t, FamilyKind.ESTAR, mode)))
    keep = _predicate(t, kind, mode)
    return tuple(a for a in t.ground.subsets() if keep(a))


def family(t: Topology, kind: FamilyKind | str,
           mode: DeltaMode | str = DeltaMode.STANDARD,
           max_n: int | None = None) -> tuple[int, ...]:
    """All subsets of kind ``kind``, ascending by mask."""
    check_sweep(t.n, max_n)
    return _family(t, _kind(kind), _mode(mode))


@lru_cache(maxsize=16384)
def family_set(t: Topology, kind: FamilyKind | str,
               mode: DeltaMode | str = DeltaMode.STANDARD) -> frozenset[int]:
    return frozenset(family(t, kind, mode, max_n=t.n))


def is_member(t: Topology, kind: FamilyKind | str, a: int,
              mode: DeltaMode | str = DeltaMode.STANDARD) -> bool:
    return a in family_set(t, _kind(kind), _mode(mode))


def gen_interior(t: Topology, kind: FamilyKind | str, a: int,
                 mode: DeltaMode | str = DeltaMode.STANDARD) -> int:
    """Union of the members of ``kind`` contained in ``a``."""
    t.ground.check(a)
    out = 0
    for u in family(t, kind, mode, max_n=t.n):
        if is_subset(u, a):
            out |= u
    return out


def gen_closure(t: Topology, kind: FamilyKind | str, a: int,
                mode: DeltaMode | str = DeltaMode.STANDARD) -> int:
    """Intersection of the complements of ``kind`` members that contain ``a``."""
    t.ground.check(a)
    full = t.full
    out = full
    for u in family(t, kind, mode, max_n=t.n):
        c = full & ~u
        if is_subset(a, c):
            out &= c
    return out


def estar_interior(t: Topology, a: int, mode: DeltaMode | str = DeltaMode.STANDARD) -> int:
    return gen_interior(t, FamilyKind.ESTAR, a, mode)


def estar_closure(t: Topology, a: int, mode: DeltaMode | str = DeltaMode.STANDARD) -> int:
    return gen_closure(t, FamilyKind.ESTAR, a, mode)
