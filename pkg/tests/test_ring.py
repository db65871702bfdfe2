from itertools import product

import pytest
from hypothesis import given, strategies as st

from estar_rings import (GroundSet, RingError, RingHom, catalog, is_homomorphism, scale_left,
                         scale_right, set_add, set_mul, set_neg, translate, validate_ring)
from estar_rings.ring import EXAMPLE34_ADD, EXAMPLE34_MUL

from conftest import m

CATALOG = [("zn", (n,)) for n in range(1, 9)] + [
    ("product", (2, 2)), ("product", (2, 3)), ("product", (2, 4)), ("example34", ())]


def test_example34_tables(e34_ring):
    assert e34_ring.add == EXAMPLE34_ADD
    assert e34_ring.mul == EXAMPLE34_MUL
    assert e34_ring.ground.labels == ("a", "b", "c", "d")
    assert e34_ring.zero == 0
    assert e34_ring.unity is None
    assert e34_ring.units == 0
    # multiplication is 2xy on Z4
    assert all(e34_ring.mul[x][y] == (2 * x * y) % 4 for x, y in product(range(4), repeat=2))


def test_z4_units(z4):
    assert (z4.zero, z4.unity) == (0, 1)
    assert z4.units == 0b1010
    assert z4.inverse_table == {1: 1, 3: 3}


def test_mutated_table_reports_witness():
    add = [list(r) for r in EXAMPLE34_ADD]
    add[1][3] = 1  # (b, d) -> b
    with pytest.raises(RingError, match="commutative") as exc:
        validate_ring(GroundSet(("a", "b", "c", "d")), add, EXAMPLE34_MUL)
    assert set(exc.value.witness) == {1, 3}


def test_validator_catches_each_axiom():
    g = GroundSet.synthetic(2)
    with pytest.raises(RingError, match="identity"):
        validate_ring(g, [[1, 1], [1, 1]], [[0, 0], [0, 0]])
    with pytest.raises(RingError, match="distributiv"):
        validate_ring(g, [[0, 1], [1, 0]], [[1, 1], [1, 1]])
    with pytest.raises(RingError, match="out of range"):
        validate_ring(g, [[0, 2], [1, 0]], [[0, 0], [0, 0]])
    with pytest.raises(RingError, match="2x2"):
        validate_ring(g, [[0, 1]], [[0, 0], [0, 0]])
    g3 = GroundSet.synthetic(3)
    # x*y = y is associative but not right-distributive
    with pytest.raises(RingError):
        validate_ring(g3, [[(x + y) % 3 for y in range(3)] for x in range(3)],
                      [[y for y in range(3)] for _ in range(3)])


def test_set_arithmetic_examples(e34_ring, z4):
    g = e34_ring.ground
    assert set_add(e34_ring, m(g, "a"), m(g, "c")) == m(g, "c")
    assert set_add(e34_ring, m(g, "ab"), m(g, "ad")) == m(g, "abd")
    assert translate(e34_ring, g.index("b"), m(g, "ab")) == m(g, "bc")
    assert scale_left(z4, 3, 0b0110) == 0b1100
    assert scale_right(z4, 0b0110, 3) == 0b1100
    for a in range(16):
        assert set_add(z4, 1 << z4.zero, a) == a
        assert translate(z4, 0, a) == a


def test_example34_products_land_in_a_c(e34_ring):
    ac = 0b0101
    for a in range(16):
        for b in range(16):
            assert set_mul(e34_ring, a, b) & ~ac == 0


@pytest.mark.parametrize("name,params", CATALOG)
def test_catalog_validates(name, params):
    r = catalog(name, *params)
    r2 = validate_ring(r.ground, r.add, r.mul)
    assert r2 == r
    assert (r.units != 0) == r.has_unity
    for x in range(r.n):
        assert set_neg(r, set_neg(r, 1 << x)) == 1 << x


def test_catalog_trivial_and_product():
    z1 = catalog("zn", 1)
    assert z1.unity == z1.zero == 0
    p = catalog("product", 2, 2)
    one = p.ground.index("(1,1)")
    assert p.unity == one
    assert p.units == 1 << one
    with pytest.raises(ValueError):
        catalog("matrix", 2)


@given(st.integers(2, 8), st.data())
def test_set_laws(n, data):
    r = catalog("zn", n)
    a = data.draw(st.integers(0, r.full))
    b = data.draw(st.integers(0, r.full))
    x = data.draw(st.integers(0, n - 1))
    assert set_add(r, a, b) == set_add(r, b, a)
    assert set_neg(r, set_neg(r, a)) == a
    assert translate(r, x, translate(r, r.neg(x), a)) == a


def test_homomorphisms(z4, e34_ring):
    assert is_homomorphism(tuple(range(4)), z4, z4) == (True, None)
    assert is_homomorphism((0, 0, 0, 0), z4, e34_ring)[0]
    ok, witness = is_homomorphism((1, 2, 3, 0), z4, z4)
    assert not ok and witness == (0, 0)
    with pytest.raises(RingError):
        RingHom(z4, z4, (1, 2, 3, 0))
    RingHom(z4, z4, (0, 1, 2, 3))


def test_unit_inverses_unique():
    for n in range(1, 9):
        r = catalog("zn", n)
        for u, inv in r.inverse_table.items():
            assert [y for y in range(n) if r.mul[u][y] == r.unity] == [inv]
