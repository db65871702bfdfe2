"""Finite e*-topological rings: generalized open sets, classification,
theorem checks and small-structure search."""

from .analyzer import (CheckReport, Classification, Status, TopoRingStructure,
                       check_condition_add, check_condition_mul, check_condition_neg,
                       classify, is_continuous_at, is_gen_continuous_pointwise,
                       is_gen_continuous_preimage, replay_failure)
from .explorer import SearchGoal, enumerate_topologies, ring_pool, search
from .operators import (DeltaMode, FamilyKind, delta_closure, delta_interior, family,
                        gen_closure, gen_interior, is_regular_open, regular_closed_family,
                        regular_open_family)
from .ring import (FiniteRing, RingError, RingHom, catalog, is_homomorphism, scale_left,
                   scale_right, set_add, set_mul, set_neg, translate, validate_ring)
from .space import (GroundSet, SpaceError, Topology, closed_family, closure,
                    generate_topology, interior)
from .theorems import HomContext, run_all, run_check

__version__ = "0.1.0"
