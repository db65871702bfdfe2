import pytest

from estar_rings import (FamilyKind, Status, Topology, TopoRingStructure, catalog, classify,
                         gen_closure, generate_topology, run_all, run_check, set_add)
from estar_rings.explorer import enumerate_topologies, ring_pool
from estar_rings.theorems import (AS_PROVED, AS_STATED, REGISTRY, UnknownCheck, hom_context,
                                  summarize, t411_converse_at)

from conftest import discrete, indiscrete, m

PUBLIC_IDS = """T3.4a T3.4b C3.5a C3.5b T3.6a T3.6b C3.7a C3.7b T4.1a T4.1b T4.3a T4.3b T4.4a
T4.4b T4.5a T4.5b T4.5c T4.5d T4.6 T4.7a T4.7b T4.7c T4.7d T4.8a T4.8b T4.8c T4.8d T4.9a
T4.9b T4.9c T4.9d T4.10a T4.10b T4.10c T4.10d T4.11 T4.11-converse T4.14""".split()
UNITY_GATED = {cid for cid, e in REGISTRY.items() if e.needs_unity}


def test_registry_covers_public_ids():
    assert set(PUBLIC_IDS) <= set(REGISTRY)
    assert len(REGISTRY) == len(set(REGISTRY))
    with pytest.raises(UnknownCheck):
        run_check("T9.9", discrete(catalog("zn", 2)))


def test_t411_on_example34(e34):
    assert run_check("T4.11", e34).status is Status.PASS


def test_t411_converse_distinct_singletons(e34):
    g = e34.ground
    a, c = m(g, "a"), m(g, "c")
    t = e34.topology
    assert t.closure(set_add(e34.ring, a, c)) == m(g, "cd")
    lhs = set_add(e34.ring, gen_closure(t, "estar", a), gen_closure(t, "estar", c))
    assert lhs == c
    assert t411_converse_at(e34, a, c)
    rep = run_check("T4.11-converse", e34)
    assert rep.status is Status.PASS and rep.evidence["found"]
    assert [a, c] in rep.evidence["pairs"]
    # canonical first witness is ({a}, {a}): cl({a}) = R but e*-cl({a}) + e*-cl({a}) = {a}
    assert rep.witness == {"A": a, "B": a}


def test_converse_not_found_is_not_a_failure(z4):
    rep = run_check("T4.11-converse", discrete(z4))
    assert rep.status is Status.PASS
    assert rep.evidence["found"] is False


def test_unity_gated_on_unity_free_ring(e34):
    rep = run_check("T4.3a", e34)
    assert rep.status is Status.HYPOTHESIS_NOT_SATISFIED
    assert rep.hypothesis == "ring with unity"
    assert rep.evidence == {"clause": "pass", "vacuous": True}
    rep = run_check("T4.5a", e34)
    assert rep.evidence["vacuous"] is False


def test_example34_as_proved_all_pass(e34):
    reports = run_all(e34, AS_PROVED)
    assert not [r for r in reports if r.failed]
    counts = summarize(reports)
    assert counts["hypothesis-not-satisfied"] == len(UNITY_GATED) + 1  # + T4.14 without a hom


def test_c37b_as_stated_fails_on_example34(e34):
    g = e34.ground
    rep = run_check("C3.7b", e34, AS_STATED)
    assert rep.status is Status.FAIL
    assert rep.witness == {"x": g.index("b"), "A": m(g, "cd")}
    # replay: b + {c,d} = {a,d}; int({a,d}) = {a}; cl({a}) = R; int(R) = R
    t = e34.topology
    xa = set_add(e34.ring, m(g, "b"), m(g, "cd"))
    assert xa == m(g, "ad")
    assert t.interior(t.closure(t.interior(xa))) == g.full
    assert run_check("C3.7b", e34, AS_PROVED).passed


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_t45c_as_stated_fails_on_discrete_zn(n):
    s = discrete(catalog("zn", n))
    rep = run_check("T4.5c", s, AS_STATED)
    assert rep.status is Status.FAIL
    r, a = rep.witness["r"], rep.witness["A"]
    # r * int(A) = rA differs from e*-int(A) = A in a discrete space
    assert (1 << s.ring.mul[r][next(i for i in range(n) if a >> i & 1)]) & ~a
    assert run_check("T4.5c", s, AS_PROVED).passed


def test_z3_t45c_witness():
    rep = run_check("T4.5c", discrete(catalog("zn", 3)), AS_STATED)
    assert rep.witness == {"r": 2, "A": 0b010}


def test_z4_discrete_with_identity_hom(z4):
    s = discrete(z4)
    hom = hom_context(s, s, (0, 1, 2, 3))
    reports = run_all(s, AS_PROVED, hom=hom)
    assert all(r.passed for r in reports), [r for r in reports if not r.passed]
    both = run_all(s, "both", hom=hom)
    assert [(r.check_id, r.variant) for r in both if r.failed] == [("T4.5c", AS_STATED)]


def test_t414_gating(z4):
    ind, dis = indiscrete(z4), discrete(z4)
    assert run_check("T4.14", dis).hypothesis == "homomorphism and target structure supplied"
    rep = run_check("T4.14", dis, hom=hom_context(dis, dis, (1, 2, 3, 0)))
    assert rep.hypothesis == "f is a ring homomorphism"
    rep = run_check("T4.14", ind, hom=hom_context(ind, dis, (0, 1, 2, 3)))
    assert rep.hypothesis == "f is continuous at 0_R"
    s = TopoRingStructure(z4, Topology.from_opens(z4.ground, (0, 0b0101, 0b1010, 0b1111)))
    rep = run_check("T4.14", dis, hom=hom_context(dis, s, (0, 1, 2, 3)))
    assert rep.status is Status.PASS


def test_t414_nontrivial_quotient_map(z4):
    z2 = catalog("zn", 2)
    src = TopoRingStructure(z4, generate_topology(z4.ground, [0b0101]))
    assert classify(src).kinds["estar"]
    rep = run_check("T4.14", src, hom=hom_context(src, discrete(z2), (0, 1, 0, 1)))
    assert rep.status is Status.PASS


def _structures(max_order):
    for order in range(1, max_order + 1):
        for ring in ring_pool(order, brute=order <= 3):
            for t in enumerate_topologies(order, ring.ground):
                yield TopoRingStructure(ring, t)


def test_gating_soundness_and_known_divergences():
    seen_not_estar = 0
    for s in _structures(3):
        estar = classify(s).kinds["estar"]
        proved = {(r.check_id): r for r in run_all(s, AS_PROVED)}
        stated = {(r.check_id): r for r in run_all(s, AS_STATED)}
        for cid, entry in REGISTRY.items():
            p, q = proved[cid], stated[cid]
            if entry.needs_estar and not estar:
                assert p.status is Status.HYPOTHESIS_NOT_SATISFIED
                assert p.hypothesis == "e*-topological ring"
                continue
            if entry.needs_unity and not s.ring.has_unity:
                assert p.status is Status.HYPOTHESIS_NOT_SATISFIED
            # as-proved holds wherever as-stated holds
            if q.passed:
                assert p.passed
            assert not p.failed, (cid, s)
            if q.failed:
                assert cid in {"C3.7a", "C3.7b", "T4.5c"}
        seen_not_estar += not estar
    assert seen_not_estar > 0


def test_order4_catalog_non_unity_entries_pass():
    for ring in ring_pool(4):
        for t in enumerate_topologies(4, ring.ground):
            s = TopoRingStructure(ring, t)
            if not classify(s, kinds=(FamilyKind.ESTAR,)).kinds["estar"]:
                continue
            for r in run_all(s, AS_PROVED):
                assert not r.failed, (r.check_id, t.opens, ring.mul)
