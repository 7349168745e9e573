"""Minimal-bandwidth one-parameter torus actions on generalized Grassmannians.

Exact root-system combinatorics (Bourbaki numbering, rational weight
coordinates in the simple-root basis) drives everything: Weyl orbits
enumerate torus-fixed points, one-node projections give one-parameter
actions, and the package computes their bandwidths, level structures,
fixed components, equalization, Poincare polynomials, homology
decompositions, and graded Hasse graphs.
"""

from .rootdata import (
    DynkinType,
    DiagramAutomorphism,
    RootSystem,
    root_system,
    cartan_matrix,
    positive_roots,
    fundamental_weight,
    coroot_pairing,
    coweight_pairing,
    opposition_involution,
)
from .weyl import (
    ORBIT_CAP,
    OrbitCapExceeded,
    WeightOrbit,
    reflect,
    orbit,
    orbit_with_witnesses,
    antidominant,
)
from .grassmannian import (
    GeneralizedGrassmannian,
    MarkedRootSet,
    FixedPointRecord,
    FixedPointPolytope,
    k_index,
    marked_roots,
    fixed_points,
    iter_fixed_points,
    polytope_vertices,
)
from .cstar import (
    HASSE_CAP,
    Bandwidth,
    BandwidthReport,
    ComponentRecord,
    Level,
    LevelDecomposition,
    SourceSink,
    BBDecomposition,
    HasseGraph,
    DominanceFuzzResult,
    bandwidth,
    minimal_bandwidth,
    bandwidth_oracle,
    level_decomposition,
    components,
    source_sink,
    is_equalized,
    poincare_polynomial,
    bb_decomposition,
    hasse_graph,
    dominance_fuzz,
)
from .table1 import TableRow, golden_rows, computed_rows, diff_table

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "DynkinType", "DiagramAutomorphism", "RootSystem", "root_system",
    "cartan_matrix", "positive_roots", "fundamental_weight",
    "coroot_pairing", "coweight_pairing", "opposition_involution",
    "ORBIT_CAP", "OrbitCapExceeded", "WeightOrbit",
    "reflect", "orbit", "orbit_with_witnesses", "antidominant",
    "GeneralizedGrassmannian", "MarkedRootSet", "FixedPointRecord",
    "FixedPointPolytope", "k_index", "marked_roots", "fixed_points",
    "iter_fixed_points", "polytope_vertices",
    "HASSE_CAP", "Bandwidth", "BandwidthReport", "ComponentRecord",
    "Level", "LevelDecomposition", "SourceSink", "BBDecomposition",
    "HasseGraph", "DominanceFuzzResult",
    "bandwidth", "minimal_bandwidth", "bandwidth_oracle",
    "level_decomposition", "components", "source_sink", "is_equalized",
    "poincare_polynomial", "bb_decomposition", "hasse_graph",
    "dominance_fuzz",
    "TableRow", "golden_rows", "computed_rows", "diff_table",
]
