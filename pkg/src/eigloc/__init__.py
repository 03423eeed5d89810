"""Eigenvalue localization for stochastic matrices and spectral bounds for
degree-normalized graph matrices.

The deflation construction removes one state of a stochastic matrix and
subtracts its row from the remaining rows; the result carries exactly the
non-unit spectrum. Per-row discs of every deflation, intersected over the
removed state (with the point 1 adjoined), localize the non-unit eigenvalues.
Applied to the degree-normalized adjacency matrix of a connected graph, the
disc edges reduce to closed forms in degrees and common-neighbor counts,
giving bounds on the extreme eigenvalues. A built-in dense eigensolver serves
as the verification oracle throughout.
"""

from .matcore import (
    DEFAULT_ROW_SUM_TOL,
    DenseMatrix,
    IndexOutOfRange,
    InputError,
    LocalizationError,
    MatrixParseError,
    NegativeEntry,
    NotSquare,
    NumericalError,
    OrderTooSmall,
    RowSumViolation,
    Spectrum,
    StochasticMatrix,
    is_irreducible,
    load_matrix,
    parse_matrix_text,
    trace,
    validate_stochastic,
)
from .deflate import DeflatedMatrix, deflate, deflated_all
from .regions import (
    ComplexCenters,
    Disc,
    DiscUnion,
    InclusionRegion,
    contains,
    cvetkovic_disc,
    deflated_region,
    disc_union_in_disc,
    full_inclusion_region,
    gershgorin_discs,
    inclusion_region_json,
    lili_disc,
    real_interval_hull,
)
from .randic import (
    BoundReport,
    Disconnected,
    EdgeListParseError,
    Graph,
    IsolatedVertex,
    NoEdges,
    NotRegular,
    RegularBoundReport,
    VertexOutOfRange,
    alpha,
    beta,
    common_neighbors,
    is_connected,
    load_graph,
    normalized_laplacian_bounds,
    parse_edge_list,
    randic_bounds,
    randic_matrix,
    regular_graph_bounds,
    rojo_soto_bound,
    symmetric_randic,
)
from .eigsolve import (
    NoConvergence,
    NotSymmetric,
    PerronMultiplicityWarning,
    PerronNotFound,
    SolverConfig,
    eig_general,
    eig_symmetric,
    identify_perron,
    non_perron,
    pairing_distance,
    spectra_match,
)
from .svgplot import render_region_svg

__version__ = "0.1.0"
