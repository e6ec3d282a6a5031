"""Triangulations of the completed infinity-gon and their friezes."""

from .arcs import INF, Arc, ArcKind, classify_arc, crossing, parse_arc
from .cluster import (
    ClusterSeed,
    CrossingString,
    cluster_variable,
    coefficient_frieze,
    crossing_string,
    flip_seed,
    initial_seed,
    submodule_count,
)
from .errors import InfgonError
from .frieze import (
    FriezeArray,
    entry_one_iff_arc,
    frieze_from_quiddity,
    frieze_from_window,
    shift_frieze,
)
from .laurent import LaurentPoly, exact_div, has_positive_coefficients, specialize_ones
from .modules import (
    CY,
    Ideal,
    MatrixFactorization,
    Projective,
    ar_sequence,
    ar_translate,
    arc_to_module,
    exchange_sequence,
    ext_dimension,
    extension_middle,
    matrix_factorization,
    min_y_degree,
    module_to_arc,
)
from .sequences import (
    BinarySeq,
    GapSeq,
    has_consecutive_ones,
    is_special_window,
    penrose_decode,
    penrose_encode,
    predict_mutation_effect,
    psi,
    sequences_differ_finitely,
    specialize,
    x_sequence,
    x_to_y,
    y_sequence,
    y_to_x,
)
from .triangulation import (
    TriangulationWindow,
    fan_window,
    flip,
    fountain_arc_sets,
    leapfrog_window,
    quadrilateral_of,
    quiddity_at,
    running_example,
    triangles,
    validate_window,
    window,
)

__version__ = "0.1.0"
