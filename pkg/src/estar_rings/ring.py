"""Finite rings given by Cayley tables.

Tables are indexed by element position: ``add[i][j]`` is the index of
``i + j``.  Zero, unity and the unit group are always derived from the
tables, never taken on trust.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Sequence

from .space import GroundSet, bits

Table = tuple[tuple[int, ...], ...]


class RingError(ValueError):
    """A table violates a ring axiom; ``witness`` names the offending elements."""

    def __init__(self, message: str, witness: tuple[int, ...] = ()):
        super().__init__(message)
        self.witness = witness


def _as_table(rows: Sequence[Sequence[int]], n: int, name: str) -> Table:
    if len(rows) != n or any(len(r) != n for r in rows):
        raise RingError(f"{name} table must be {n}x{n}")
    out = tuple(tuple(int(v) for v in r) for r in rows)
    for i, j in product(range(n), repeat=2):
        if not 0 <= out[i][j] < n:
            raise RingError(f"{name} table entry ({i},{j}) = {out[i][j]} out of range", (i, j))
    return out


@dataclass(frozen=True)
class FiniteRing:
    ground: GroundSet
    add: Table
    mul: Table
    zero: int
    unity: int | None
    units: int

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def full(self) -> int:
        return self.ground.full

    @property
    def has_unity(self) -> bool:
        return self.unity is not None

    @cached_property
    def neg_table(self) -> tuple[int, ...]:
        return tuple(next(y for y in range(self.n) if self.add[x][y] == self.zero)
                     for x in range(self.n))

    @cached_property
    def inverse_table(self) -> dict[int, int]:
        """Multiplicative inverse of each unit."""
        if self.unity is None:
            return {}
        one, m = self.unity, self.mul
        return {x: y for x in bits(self.units) for y in range(self.n)
                if m[x][y] == one and m[y][x] == one}

    def neg(self, x: int) -> int:
        return self.neg_table[x]

    def label(self, x: int) -> str:
        return self.ground.labels[x]

    def tables_key(self) -> tuple[Table, Table]:
        return self.add, self.mul


def validate_ring(ground: GroundSet, add: Sequence[Sequence[int]],
                  mul: Sequence[Sequence[int]]) -> FiniteRing:
    """Check every ring axiom by brute force and derive zero, unity and units.

    Raises :class:`RingError` carrying the first violating tuple found.
    """
    n = ground.n
    a = _as_table(add, n, "addition")
    m = _as_table(mul, n, "multiplication")
    lab = ground.labels
    rng = range(n)

    for x, y in product(rng, repeat=2):
        if a[x][y] != a[y][x]:
            raise RingError(f"addition not commutative at ({lab[x]},{lab[y]})", (x, y))
    for x, y, z in product(rng, repeat=3):
        if a[a[x][y]][z] != a[x][a[y][z]]:
            raise RingError(f"addition not associative at ({lab[x]},{lab[y]},{lab[z]})", (x, y, z))
    zeros = [e for e in rng if all(a[e][x] == x for x in rng)]
    if not zeros:
        raise RingError("addition has no identity element")
    zero = zeros[0]
    for x in rng:
        if not any(a[x][y] == zero for y in rng):
            raise RingError(f"{lab[x]} has no additive inverse", (x,))
    for x, y, z in product(rng, repeat=3):
        if m[m[x][y]][z] != m[x][m[y][z]]:
            raise RingError(
                f"multiplication not associative at ({lab[x]},{lab[y]},{lab[z]})", (x, y, z))
        if m[x][a[y][z]] != a[m[x][y]][m[x][z]]:
            raise RingError(
                f"left distributivity fails at ({lab[x]},{lab[y]},{lab[z]})", (x, y, z))
        if m[a[y][z]][x] != a[m[y][x]][m[z][x]]:
            raise RingError(
                f"right distributivity fails at ({lab[x]},{lab[y]},{lab[z]})", (x, y, z))

    unity = next((e for e in rng if all(m[e][x] == x == m[x][e] for x in rng)), None)
    units = 0
    if unity is not None:
        for x in rng:
            if any(m[x][y] == unity == m[y][x] for y in rng):
                units |= 1 << x
    return FiniteRing(ground, a, m, zero, unity, units)


# -- set arithmetic --------------------------------------------------------------

def set_add(r: FiniteRing, a: int, b: int) -> int:
    out = 0
    bs = list(bits(b))
    for x in bits(a):
        row = r.add[x]
        for y in bs:
            out |= 1 << row[y]
    return out


def set_mul(r: FiniteRing, a: int, b: int) -> int:
    out = 0
    bs = list(bits(b))
    for x in bits(a):
        row = r.mul[x]
        for y in bs:
            out |= 1 << row[y]
    return out


def set_neg(r: FiniteRing, a: int) -> int:
    out = 0
    for x in bits(a):
        out |= 1 << r.neg_table[x]
    return out


def translate(r: FiniteRing, x: int, a: int) -> int:
    return set_add(r, 1 << x, a)


def scale_left(r: FiniteRing, s: int, a: int) -> int:
    return set_mul(r, 1 << s, a)


def scale_right(r: FiniteRing, a: int, s: int) -> int:
    return set_mul(r, a, 1 << s)


def image(f: Sequence[int], a: int) -> int:
    out = 0
    for x in bits(a):
        out |= 1 << f[x]
    return out


def preimage(f: Sequence[int], b: int) -> int:
    out = 0
    for x, fx in enumerate(f):
        if b >> fx & 1:
            out |= 1 << x
    return out


# -- homomorphisms ---------------------------------------------------------------

@dataclass(frozen=True)
class RingHom:
    source: FiniteRing
    target: FiniteRing
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "map", tuple(self.map))
        ok, witness = is_homomorphism(self.map, self.source, self.target)
        if not ok:
            raise RingError(f"not a ring homomorphism; fails at {witness}", witness or ())


def is_homomorphism(f: Sequence[int], r: FiniteRing,
                    s: FiniteRing) -> tuple[bool, tuple[int, int] | None]:
    """Return ``(True, None)`` or ``(False, (x, y))`` for the first failing pair."""
    if len(f) != r.n or any(not 0 <= v < s.n for v in f):
        raise RingError("map must send every source element into the target")
    for x, y in product(range(r.n), repeat=2):
        if f[r.add[x][y]] != s.add[f[x]][f[y]] or f[r.mul[x][y]] != s.mul[f[x]][f[y]]:
            return False, (x, y)
    return True, None


# -- catalog ---------------------------------------------------------------------

EXAMPLE34_LABELS = ("a", "b", "c", "d")
EXAMPLE34_ADD = (
    (0, 1, 2, 3),
    (1, 2, 3, 0),
    (2, 3, 0, 1),
    (3, 0, 1, 2),
)
EXAMPLE34_MUL = (
    (0, 0, 0, 0),
    (0, 2, 0, 2),
    (0, 0, 0, 0),
    (0, 2, 0, 2),
)


def zn(n: int) -> FiniteRing:
    if n < 1:
        raise ValueError("Z_n needs n >= 1")
    g = GroundSet(tuple(str(i) for i in range(n)))
    rng = range(n)
    return validate_ring(g, [[(x + y) % n for y in rng] for x in rng],
                         [[(x * y) % n for y in rng] for x in rng])


def product_ring(r: FiniteRing, s: FiniteRing) -> FiniteRing:
    pairs = [(i, j) for i in range(r.n) for j in range(s.n)]
    if len(pairs) > 16:
        raise ValueError("product ring exceeds 16 elements")
    pos = {p: k for k, p in enumerate(pairs)}
    g = GroundSet(tuple(f"({r.label(i)},{s.label(j)})" for i, j in pairs))
    add = [[pos[r.add[i][k], s.add[j][l]] for k, l in pairs] for i, j in pairs]
    mul = [[pos[r.mul[i][k], s.mul[j][l]] for k, l in pairs] for i, j in pairs]
    return validate_ring(g, add, mul)


def example34() -> FiniteRing:
    """Z4 addition with multiplication x*y = 2xy, relabelled a..d."""
    return validate_ring(GroundSet(EXAMPLE34_LABELS), EXAMPLE34_ADD, EXAMPLE34_MUL)


def catalog(name: str, *params) -> FiniteRing:
    """Build a named ring: ``zn`` (n), ``product`` (two rings or two orders),
    ``example34``."""
    if name == "zn":
        if len(params) != 1:
            raise ValueError("zn takes one parameter: n")
        return zn(int(params[0]))
    if name == "product":
        if len(params) != 2:
            raise ValueError("product takes two rings")
        r, s = (p if isinstance(p, FiniteRing) else zn(int(p)) for p in params)
        return product_ring(r, s)
    if name == "example34":
        if params:
            raise ValueError("example34 takes no parameters")
        return example34()
    raise ValueError(f"unknown catalog ring {name!r}")
