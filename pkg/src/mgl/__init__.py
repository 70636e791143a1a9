"""Exact computation with matroids, valuated matroids, oriented matroids,
and oriented valuated matroids via Plücker vectors: Dressian and oriented
cell structures with exact rational LP certificates, the MacPhersonian,
direct sums and matroid sliding, and the injection operad with its action.
"""

from .ground import GroundSet, enumerate_subsets, exchange_pairs, perm_sign
from .matroid import (
    MatroidVector,
    enumerate_matroids,
    find_exchange_violation,
    is_matroid,
    specializes,
    uniform,
)
from .valuated import (
    DressianCellId,
    InitialDatum,
    MulValuation,
    TropicalVector,
    cell_of,
    closure_candidates,
    closure_perturbation_feasible,
    enumerate_dressian_cells,
    initial_datum,
    is_tropical_plucker,
    underlying_matroid,
)
from .oriented import (
    Chirotope,
    MacPPoset,
    OrientedMatroidClass,
    enumerate_oriented_matroids,
    i_max,
    is_chirotope,
    om_class,
    om_specializes,
)
from .orval import (
    OrientedCellId,
    OrientedCellPoset,
    OrientedTropicalVector,
    cell_of_oriented,
    check_fiber_finality,
    is_compatible,
    is_oriented_tropical_plucker,
    oriented_cell_poset,
    project_to_macp,
    restrict_datum,
    sign_chirotope,
    split,
)
from .sums_sliding import (
    InjectionFamily,
    SimplexPoint,
    direct_sum,
    pushforward,
    rank_zero_unit,
    slide,
    with_rational_modulus,
)
from .operad import (
    ConvexCombination,
    InjectionVertex,
    Partition,
    WindowExhausted,
    check_action_compatibility,
    check_operad_laws,
    cone_vertex,
    is_simplex,
    operad_act,
    operad_compose,
    unit_point,
    unit_vertex,
)
from .complexes import (
    FinitePoset,
    SimplicialComplex,
    euler_characteristic,
    f_vector,
    good_cover_nerve_data,
    order_complex,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
