"""Exact enumeration of tropical plane curves and Severi degrees on toric surfaces.

The package counts plane tropical curves of a given degree and genus through
generic point configurations with Mikhalkin multiplicities, entirely in exact
rational arithmetic, and cross-checks the resulting Severi degrees against two
independent classical recursions (Kontsevich and Caporaso-Harris).  Auxiliary
tools cover lattice-polygon invariants, sublattice lower bounds on the number
of Severi components, moduli strata of combinatorial types, and the
tropicalization of explicit rational curves over valued fields.
"""

from .polygons import (
    LatticePolygon,
    PolygonSide,
    TropicalDegree,
    boundary_points,
    d_triangle,
    delta_invariant,
    dual_degree,
    interior_points,
    kite,
    severi_dimension,
)
from .sublattices import Sublattice, component_lower_bound, kite_lower_bound
from .graphs import (
    CombinatorialType,
    Graph,
    ParamTropicalCurve,
    TropicalCurve,
    automorphism_count,
    check_balancing,
    contract,
    degree,
    expected_dimension,
    genus,
    is_stable,
    mikhalkin_multiplicity,
)
from .strata import (
    DegenerateConfiguration,
    PointConfiguration,
    is_regular,
    solve_through_points,
    stratum_dimension,
)
from .counting import (
    CountReport,
    CountRequest,
    GenericityExhausted,
    InvalidRequest,
    count_curves,
    dimension_bound_audit,
    generate_types,
)
from .recursions import (
    InconsistentProfile,
    TangencyProfile,
    caporaso_harris,
    kontsevich,
    severi_degree,
)
from .valued import (
    MarkCollision,
    PrimeField,
    RationalCurveSpec,
    Rationals,
    ValuedField,
    baby_example_spec,
    char3_cusp_spec,
    non_immersion_points,
    pullback_divisor,
    tropicalize_rational,
)

__version__ = "0.1.0"
