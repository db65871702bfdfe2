"""Exhaustive search over small (ring, topology) pairs."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Any, Iterator

from .analyzer import CheckReport, Status, TopoRingStructure, classify
from .operators import DeltaMode, FamilyKind
from .ring import FiniteRing, RingError, catalog, validate_ring
from .space import GroundSet, SpaceError, Topology, bits
from .theorems import AS_STATED, REGISTRY, run_check

MAX_ENUM_POINTS = 4
MAX_POOL_ORDER = 8
MAX_BRUTE_ORDER = 4
HIERARCHY = (FamilyKind.OPEN, FamilyKind.BETA, FamilyKind.ESTAR)


class SearchError(ValueError):
    pass


# -- topologies ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def _topology_families(n: int) -> tuple[tuple[int, ...], ...]:
    full = (1 << n) - 1
    middle = [m for m in range(1, full)]
    out = []
    for choice in range(1 << len(middle)):
        fam = [0] + [m for i, m in enumerate(middle) if choice >> i & 1] + [full]
        members = set(fam)
        if all(a | b in members and a & b in members
               for i, a in enumerate(fam) for b in fam[i + 1:]):
            out.append(tuple(sorted(members)))
    return tuple(out)


def enumerate_topologies(n: int, ground: GroundSet | None = None) -> Iterator[Topology]:
    """Every topology on ``n`` points, each once, ordered by the bitmask of
    which proper nonempty subsets it contains."""
    if not 1 <= n <= MAX_ENUM_POINTS:
        raise SpaceError(f"topology enumeration supports 1 <= n <= {MAX_ENUM_POINTS}")
    g = ground or GroundSet.synthetic(n)
    if g.n != n:
        raise SpaceError("ground set size does not match n")
    for opens in _topology_families(n):
        yield Topology(g, opens)


def count_topologies(n: int) -> int:
    if not 1 <= n <= MAX_ENUM_POINTS:
        raise SpaceError(f"topology enumeration supports 1 <= n <= {MAX_ENUM_POINTS}")
    return len(_topology_families(n))


# -- rings ---------------------------------------------------------------------------

def _catalog_rings(order: int) -> list[FiniteRing]:
    rings = [catalog("zn", order)]
    for a in range(2, order):
        b, rem = divmod(order, a)
        if rem == 0 and a <= b:
            rings.append(catalog("product", a, b))
            # non-cyclic factor for order 8
            if b == 4:
                rings.append(catalog("product", catalog("zn", a), catalog("product", 2, 2)))
    if order == 4:
        rings.append(catalog("example34"))
    return rings


def _brute_rings(order: int) -> Iterator[FiniteRing]:
    g = GroundSet.synthetic(order)
    rng = range(order)
    # cyclic group: bilinear products are fixed by 1*1 = k
    add = [[(x + y) % order for y in rng] for x in rng]
    for k in rng:
        yield validate_ring(g, add, [[(k * x * y) % order for y in rng] for x in rng])
    if order == 4:
        # Klein group as F2^2; products of the basis vectors 1 and 2 fix the rest
        xor = [[x ^ y for y in rng] for x in rng]
        for p11, p12, p21, p22 in product(rng, repeat=4):
            basis = {(0, 0): p11, (0, 1): p12, (1, 0): p21, (1, 1): p22}

            def mul(x, y):
                out = 0
                for i in bits(x):
                    for j in bits(y):
                        out ^= basis[i, j]
                return out
            try:
                yield validate_ring(g, xor, [[mul(x, y) for y in rng] for x in rng])
            except RingError:
                continue


def ring_pool(order: int, brute: bool = False) -> list[FiniteRing]:
    """Catalog rings of the given order, optionally with brute-force bilinear
    multiplications; deduplicated by table equality."""
    if not 1 <= order <= MAX_POOL_ORDER:
        raise SearchError(f"ring pool supports orders 1..{MAX_POOL_ORDER}")
    rings = _catalog_rings(order)
    if brute and order <= MAX_BRUTE_ORDER:
        rings.extend(_brute_rings(order))
    seen, out = set(), []
    for r in rings:
        key = r.tables_key()
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out


# -- search --------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchGoal:
    tag: str
    args: tuple[str, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "SearchGoal":
        tag, _, rest = text.partition(":")
        args = tuple(a.strip() for a in rest.split(",") if a.strip())
        return cls.make(tag.strip(), *args)

    @classmethod
    def make(cls, tag: str, *args: str) -> "SearchGoal":
        if tag == "separating":
            if len(args) != 2:
                raise SearchError("separating needs two kinds, e.g. separating:beta,estar")
            try:
                lo, hi = (HIERARCHY.index(FamilyKind(a)) for a in args)
            except ValueError:
                raise SearchError(f"separating kinds must be among "
                                  f"{[k.value for k in HIERARCHY]}") from None
            if lo >= hi:
                raise SearchError("separating pair must go up the hierarchy open < beta < estar")
        elif tag in ("converse", "converse-counterexample"):
            tag = "converse"
            if len(args) != 1 or args[0] not in REGISTRY:
                raise SearchError(f"converse needs one registry check id, got {args}")
        elif tag == "census":
            if args:
                raise SearchError("census takes no arguments")
        else:
            raise SearchError(f"unknown goal {tag!r}")
        return cls(tag, tuple(args))

    def __str__(self) -> str:
        return self.tag + (":" + ",".join(self.args) if self.args else "")


@dataclass
class SearchHit:
    structure: TopoRingStructure
    evidence: dict[str, Any]


def _report_dict(r: CheckReport) -> dict[str, Any]:
    return {"check": r.check_id, "status": r.status.value, "witness": r.witness,
            "evidence": r.evidence}


def evaluate_goal(goal: SearchGoal, s: TopoRingStructure,
                  mode: DeltaMode = DeltaMode.STANDARD) -> dict[str, Any] | None:
    """Evidence when ``s`` satisfies ``goal``, else None."""
    if goal.tag == "census":
        return {"classification": classify(s, mode).kinds}
    if goal.tag == "separating":
        lo, hi = goal.args
        c = classify(s, mode, kinds=(lo, hi))
        if c[hi] and not c[lo]:
            failing = next(r for r in c.reports if r.kind == lo and r.failed)
            return {"classification": c.kinds, "failure": _report_dict(failing)}
        return None
    check_id = goal.args[0]
    converse = f"{check_id}-converse"
    if converse in REGISTRY:
        rep = run_check(converse, s, AS_STATED, mode)
        return _report_dict(rep) if rep.evidence.get("found") else None
    rep = run_check(check_id, s, AS_STATED, mode)
    return _report_dict(rep) if rep.status is Status.FAIL else None


def _work(item):
    goal, mode, ring, opens_list = item
    hits = []
    for idx, opens in opens_list:
        s = TopoRingStructure(ring, Topology(ring.ground, opens))
        ev = evaluate_goal(goal, s, mode)
        if ev is not None:
            hits.append((idx, ev))
    return hits


def search(goal: SearchGoal | str, max_order: int, max_points: int, workers: int = 1,
           brute: bool = False, mode: DeltaMode | str = DeltaMode.STANDARD) -> list[SearchHit]:
    """All (ring, topology) pairs up to the caps that satisfy ``goal``.

    Output order is (order, ring pool position, topology enumeration position)
    regardless of ``workers``.
    """
    if isinstance(goal, str):
        goal = SearchGoal.parse(goal)
    mode = DeltaMode(mode)
    if not 1 <= max_points <= MAX_ENUM_POINTS:
        raise SearchError(f"max_points must be in 1..{MAX_ENUM_POINTS}")
    if not 1 <= max_order <= MAX_POOL_ORDER:
        raise SearchError(f"max_order must be in 1..{MAX_POOL_ORDER}")

    items, keys = [], []
    for order in range(1, min(max_order, max_points) + 1):
        fams = list(enumerate(_topology_families(order)))
        for ri, ring in enumerate(ring_pool(order, brute)):
            items.append((goal, mode, ring, fams))
            keys.append((order, ri, ring))

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_work, items))
    else:
        results = [_work(it) for it in items]

    hits = []
    for (order, ri, ring), found in zip(keys, results):
        for ti, ev in sorted(found, key=lambda h: h[0]):
            topo = Topology(ring.ground, _topology_families(order)[ti])
            hits.append(SearchHit(TopoRingStructure(ring, topo),
                                  {"order": order, "ring_index": ri, "topology_index": ti,
                                   **ev}))
    return hits
