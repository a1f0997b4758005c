"""Exact genus-0 Gromov-Witten numbers of P^n and counts of singular rational curves."""
from .counts import (
    BalanceError,
    CountQuery,
    CountResult,
    IntegralityError,
    cusp_count,
    level1_S1_class,
    level1_S2,
    level1_V1_family,
    level1_V2_1,
    level1_V2_11,
    planar_node_lemmas,
    tacnode_count_P2,
    tacnode_count_P3,
    triple_point_count_P2,
    triple_point_count_P3,
)
from .descendant import descendant_invariant, jfunction_onepoint
from .exact import (
    ConstraintTuple,
    ExactScalar,
    InvariantKey,
    binomial,
    constraint_distributions,
    positive_compositions,
)
from .nodes import (
    MulticomponentSpace,
    NodeClassSpec,
    diagonal_weights,
    modified_descendant,
    planar_aggregates,
    symmetric_expand,
    vbar_number,
)
from .primary import dimension_gate, nd_plane, primary_invariant

__version__ = "0.1.0"
