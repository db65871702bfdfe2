import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from estar_rings import GroundSet, Topology, TopoRingStructure, catalog, generate_topology  # noqa: E402


@pytest.fixture(scope="session")
def e34_ring():
    return catalog("example34")


@pytest.fixture(scope="session")
def e34_top(e34_ring):
    g = e34_ring.ground
    return generate_topology(g, [g.mask("a"), g.mask("ab")])


@pytest.fixture(scope="session")
def e34(e34_ring, e34_top):
    return TopoRingStructure(e34_ring, e34_top)


@pytest.fixture(scope="session")
def z4():
    return catalog("zn", 4)


def discrete(ring):
    return TopoRingStructure(ring, Topology.discrete(ring.ground))


def indiscrete(ring):
    return TopoRingStructure(ring, Topology.indiscrete(ring.ground))


def m(ground: GroundSet, labels: str) -> int:
    """Mask from a string of single-character labels."""
    return ground.mask(labels)
