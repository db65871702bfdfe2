"""Finite ground sets, bitmask subsets and validated topologies.

Subsets are plain ``int`` bitmasks: bit ``i`` set means element ``i`` is a
member.  Labels only matter at the I/O boundary; everything in here works on
indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_POINTS = 16
#: default cap for full 2^n operator sweeps (override with ``max_n``)
SWEEP_CAP = 12


class SpaceError(ValueError):
    """Raised on malformed ground sets, masks or topologies."""


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    """Indices set in ``mask``, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


@dataclass(frozen=True)
class GroundSet:
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if not 1 <= len(labels) <= MAX_POINTS:
            raise SpaceError(f"ground set size must be in 1..{MAX_POINTS}, got {len(labels)}")
        if len(set(labels)) != len(labels):
            raise SpaceError(f"duplicate labels in {labels!r}")

    @classmethod
    def synthetic(cls, n: int) -> "GroundSet":
        return cls(tuple(f"x{i}" for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise SpaceError(f"unknown element {label!r}") from None

    def mask(self, labels: Iterable[str]) -> int:
        return mask_of(self.index(lab) for lab in labels)

    def names(self, mask: int) -> list[str]:
        self.check(mask)
        return [self.labels[i] for i in bits(mask)]

    def format(self, mask: int) -> str:
        return "{" + ",".join(self.names(mask)) + "}"

    def check(self, mask: int) -> int:
        if mask < 0 or mask >> self.n:
            raise SpaceError(f"mask {mask:#x} has bits outside 0..{self.n - 1}")
        return mask

    def complement(self, mask: int) -> int:
        return self.full & ~mask

    def subsets(self) -> range:
        return range(1 << self.n)


@dataclass(frozen=True)
class Topology:
    """A family of open sets, validated and stored in ascending mask order.

    Construct through :func:`generate_topology` or :meth:`from_opens`; the
    raw constructor validates but does not close the family.
    """

    ground: GroundSet
    opens: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        g = self.ground
        opens = tuple(sorted(set(g.check(m) for m in self.opens)))
        object.__setattr__(self, "opens", opens)
        members = set(opens)
        if 0 not in members:
            raise SpaceError("empty set is not open")
        if g.full not in members:
            raise SpaceError("whole space is not open")
        if len(opens) > 256 and members == _upsets(g, opens):
            return
        self._pairwise_check(members)

    def _pairwise_check(self, members: set[int]) -> None:
        g, opens = self.ground, self.opens
        for i, a in enumerate(opens):
            for b in opens[i + 1:]:
                if a | b not in members:
                    raise SpaceError(
                        f"not closed under union: {g.format(a)} | {g.format(b)}")
                if a & b not in members:
                    raise SpaceError(
                        f"not closed under intersection: {g.format(a)} & {g.format(b)}")

    @classmethod
    def from_opens(cls, ground: GroundSet, opens: Iterable[int]) -> "Topology":
        return cls(ground, tuple(opens))

    @classmethod
    def discrete(cls, ground: GroundSet) -> "Topology":
        return cls(ground, tuple(ground.subsets()))

    @classmethod
    def indiscrete(cls, ground: GroundSet) -> "Topology":
        return cls(ground, (0, ground.full))

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def full(self) -> int:
        return self.ground.full

    @cached_property
    def open_set(self) -> frozenset[int]:
        return frozenset(self.opens)

    @cached_property
    def neighborhoods(self) -> tuple[int, ...]:
        """Smallest open set containing each point."""
        out = []
        for x in range(self.n):
            nb = self.full
            for u in self.opens:
                if u >> x & 1:
                    nb &= u
            out.append(nb)
        return tuple(out)

    def is_open(self, mask: int) -> bool:
        return mask in self.open_set

    def is_closed(self, mask: int) -> bool:
        return self.full & ~mask in self.open_set

    def closure(self, a: int) -> int:
        # x in cl(A) iff its minimal neighbourhood meets A
        out = 0
        for x, nb in enumerate(self.neighborhoods):
            if nb & a:
                out |= 1 << x
        return out

    def interior(self, a: int) -> int:
        out = 0
        for x, nb in enumerate(self.neighborhoods):
            if nb & ~a == 0:
                out |= 1 << x
        return out

    def opens_containing(self, x: int) -> list[int]:
        return [u for u in self.opens if u >> x & 1]


def _upsets(g: GroundSet, opens: Sequence[int]) -> set[int]:
    # a union/intersection-closed family is exactly the sets that contain the
    # minimal neighbourhood of each of their points
    nbs = []
    for x in range(g.n):
        nb = g.full
        for u in opens:
            if u >> x & 1:
                nb &= u
        nbs.append(nb)
    return {a for a in g.subsets() if all(is_subset(nbs[x], a) for x in bits(a))}


def generate_topology(ground: GroundSet, subbasis: Sequence[int]) -> Topology:
    """Smallest topology on ``ground`` containing every set in ``subbasis``."""
    for m in subbasis:
        ground.check(m)
    # finite intersections first (the full set is the empty intersection)
    basis = {ground.full}
    for s in subbasis:
        basis |= {b & s for b in basis}
    # then arbitrary unions
    opens = {0}
    for b in basis:
        opens |= {u | b for u in opens}
    return Topology(ground, tuple(opens))


def closure(t: Topology, a: int) -> int:
    return t.closure(t.ground.check(a))


def interior(t: Topology, a: int) -> int:
    return t.interior(t.ground.check(a))


def closed_family(t: Topology) -> list[int]:
    return sorted(t.full & ~u for u in t.opens)


def check_sweep(n: int, max_n: int | None = None) -> None:
    cap = SWEEP_CAP if max_n is None else max_n
    if n > cap:
        raise SpaceError(f"2^{n} subset sweep exceeds cap n <= {cap}; pass max_n to override")
