import pytest
from hypothesis import given, strategies as st

from estar_rings import GroundSet, SpaceError, Topology, closed_family, closure, generate_topology, interior
from estar_rings.explorer import enumerate_topologies
from estar_rings.space import bits, mask_of

from conftest import m
from oracles import Space, to_mask, to_set


def test_ground_set_rejects_duplicates_and_size():
    with pytest.raises(SpaceError):
        GroundSet(("a", "a"))
    with pytest.raises(SpaceError):
        GroundSet(())
    with pytest.raises(SpaceError):
        GroundSet.synthetic(17)


def test_label_index_bijection():
    g = GroundSet(("p", "q", "r"))
    assert [g.index(x) for x in g.labels] == [0, 1, 2]
    assert g.names(0b101) == ["p", "r"]
    assert g.format(0) == "{}"
    with pytest.raises(SpaceError):
        g.index("z")


def test_mask_out_of_range():
    g = GroundSet.synthetic(3)
    with pytest.raises(SpaceError):
        g.check(0b1000)
    with pytest.raises(SpaceError):
        generate_topology(g, [0b1000])


def test_generate_example34(e34_ring):
    g = e34_ring.ground
    t = generate_topology(g, [m(g, "a"), m(g, "ab")])
    assert t.opens == (0, m(g, "a"), m(g, "ab"), g.full)


def test_generate_trivial_cases():
    g = GroundSet.synthetic(3)
    assert generate_topology(g, []).opens == (0, g.full)
    g2 = GroundSet(("a", "b"))
    assert generate_topology(g2, [0b01, 0b10]).opens == (0, 1, 2, 3)


def test_topology_validation_names_missing_set():
    g = GroundSet(("a", "b", "c"))
    with pytest.raises(SpaceError, match="union"):
        Topology(g, (0, m(g, "a"), m(g, "b"), g.full))
    with pytest.raises(SpaceError, match="intersection"):
        Topology(g, (0, m(g, "ab"), m(g, "bc"), g.full))
    with pytest.raises(SpaceError, match="empty"):
        Topology(g, (g.full,))


def test_large_discrete_uses_fast_validation():
    g = GroundSet.synthetic(12)
    t = Topology.discrete(g)
    assert len(t.opens) == 4096
    assert t.closure(0b101) == 0b101


def test_closure_interior_examples(e34_top):
    g = e34_top.ground
    assert closure(e34_top, m(g, "c")) == m(g, "cd")
    assert closure(e34_top, 0) == 0
    assert closure(e34_top, m(g, "a")) == g.full
    assert interior(e34_top, m(g, "ac")) == m(g, "a")
    assert interior(e34_top, g.full) == g.full
    assert interior(e34_top, m(g, "bcd")) == 0


def test_closed_family(e34_top):
    g = e34_top.ground
    assert closed_family(e34_top) == [0, m(g, "cd"), m(g, "bcd"), g.full]
    assert closed_family(Topology.discrete(GroundSet.synthetic(3))) == list(range(8))
    assert closed_family(Topology.indiscrete(GroundSet.synthetic(3))) == [0, 7]


def _all_small_topologies():
    for n in range(1, 4):
        yield from enumerate_topologies(n)


def test_closure_interior_match_literal_definition():
    for t in list(_all_small_topologies()) + list(enumerate_topologies(4)):
        sp = Space(t.n, t.opens)
        for a in t.ground.subsets():
            assert t.closure(a) == to_mask(sp.cl(to_set(a)))
            assert t.interior(a) == to_mask(sp.int(to_set(a)))


def test_kuratowski_laws_and_duality():
    for t in enumerate_topologies(4):
        full = t.full
        for a in t.ground.subsets():
            c = t.closure(a)
            assert a & ~c == 0
            assert t.closure(c) == c
            assert t.interior(a) == full & ~t.closure(full & ~a)
            for b in t.ground.subsets():
                assert t.closure(a | b) == c | t.closure(b)
                if a & ~b == 0:
                    assert c & ~t.closure(b) == 0


@given(n=st.integers(1, 6), data=st.data())
def test_generate_is_idempotent_and_valid(n, data):
    g = GroundSet.synthetic(n)
    sub = data.draw(st.lists(st.integers(0, g.full), max_size=5))
    t = generate_topology(g, sub)
    assert all(s in t.open_set for s in sub)
    assert generate_topology(g, list(t.opens)) == t
    assert list(t.opens) == sorted(set(t.opens))


def test_bits_roundtrip():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert mask_of([1, 2, 4]) == 0b10110
