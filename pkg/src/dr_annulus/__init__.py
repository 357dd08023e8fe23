"""Degree-Rips region diagrams of a weighted annulus.

Analytic side: exact disc-intersection geometry, the ball-measure profile
of the weighted annulus, and the boundary curves that cut the (scale,
density) parameter plane into homotopy-type regions.  Empirical side:
seeded sampling, degree-Rips bifiltrations of finite clouds, and H0/H1
Hilbert functions over parameter grids, with a comparison report between
the two.
"""

from .annulus import (
    AnnulusModel,
    BallMeasureProfile,
    PeakLocus,
    Regime,
    nu,
    omega,
    superlevel_inner_radius,
)
from .degree_rips import (
    DegreeRipsFrame,
    DistanceIndex,
    HilbertGrid,
    build_frame,
    distance_index,
    hilbert_grid,
    homology_ranks,
    region_agreement,
    survival_threshold,
)
from .disc_geometry import (
    CirclePair,
    LensCase,
    chord_half_height,
    classify_lens,
    lens_area,
    lens_area_derivative,
    lens_area_for_case,
)
from .errors import DomainError, InternalInconsistencyError
from .regions import (
    BOUNDARY,
    ELL_MAX,
    EMPTY,
    INF,
    POINT,
    CurveTable,
    RegionLabel,
    circle_vr_homotopy_type,
    classify,
    classify_via_radius,
    curve_table,
    geodesic_ratio,
    phi,
    rho,
    sphere,
)
from .sampling import PRNG_ID, PointCloud, read_points_csv, sample

__version__ = "0.1.0"

__all__ = [
    "AnnulusModel",
    "BallMeasureProfile",
    "BOUNDARY",
    "CirclePair",
    "CurveTable",
    "DegreeRipsFrame",
    "DistanceIndex",
    "DomainError",
    "ELL_MAX",
    "EMPTY",
    "HilbertGrid",
    "INF",
    "InternalInconsistencyError",
    "LensCase",
    "POINT",
    "PRNG_ID",
    "PeakLocus",
    "PointCloud",
    "Regime",
    "RegionLabel",
    "build_frame",
    "chord_half_height",
    "circle_vr_homotopy_type",
    "classify",
    "classify_lens",
    "classify_via_radius",
    "curve_table",
    "distance_index",
    "geodesic_ratio",
    "hilbert_grid",
    "homology_ranks",
    "lens_area",
    "lens_area_derivative",
    "lens_area_for_case",
    "nu",
    "omega",
    "phi",
    "read_points_csv",
    "region_agreement",
    "rho",
    "sample",
    "sphere",
    "superlevel_inner_radius",
    "survival_threshold",
]
