"""Closed-form norm bounds and noncommutativity certificates for weighted
bipartite tensor sums of self-adjoint contractions.

The central objects are B_c = sum_i c_i x_i (x) y_i, its pairwise
interaction magnitudes phi_ij built from commutator and anticommutator
norms, and graph-restricted variants whose constant depends only on the
minimum degree. An exact dense reference path validates every bound, and
inverse certificates convert an observed correlation value into lower
bounds on how many pairs must substantially fail to commute.
"""

from .bounds import (
    BoundReport,
    DominationCheck,
    DominationError,
    DominationReport,
    InstanceValidationError,
    PhiTable,
    TensorSumInstance,
    TwoTermSharpness,
    build_report,
    check_domination,
    chsh_identity_residual,
    complete_bound,
    exact_reference,
    phi_table,
    require_domination,
    sparse_bound,
    two_term_sharpness,
    weighted_edge_sum,
    weighted_pair_sum,
)
from .certificates import (
    CertificateReport,
    CountingBound,
    PhiThresholdBound,
    aggregate_certificate,
    build_certificate_report,
    counting_certificate,
    excess_mass,
    phi_threshold_certificate,
)
from .families import (
    ContractionCertificate,
    RandomEnsembleConfig,
    clifford_generators,
    pauli,
    random_operator,
    validate,
)
from .graphs import (
    InteractionGraph,
    IsolatedVertexError,
    chain_graph,
    complete_graph,
    cycle_graph,
    graph_constant,
    non_edges,
    random_graph_min_degree_one,
    star_graph,
)
from .instance_io import (
    SCHEMA_VERSION,
    instance_from_dict,
    instance_to_dict,
    load_instance,
    save_instance,
)
from .linalg import (
    DEFAULT_DIM_CAP,
    DimensionCapError,
    SpectralSummary,
    anticommutator,
    as_operator,
    commutator,
    hermitian_eig,
    kron,
    spectral_norm,
)
from .sweep import SweepConfig, SweepResult, run_sweep

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CertificateReport",
    "ContractionCertificate",
    "CountingBound",
    "DEFAULT_DIM_CAP",
    "DimensionCapError",
    "DominationCheck",
    "DominationError",
    "DominationReport",
    "InstanceValidationError",
    "InteractionGraph",
    "IsolatedVertexError",
    "PhiTable",
    "PhiThresholdBound",
    "RandomEnsembleConfig",
    "SCHEMA_VERSION",
    "SpectralSummary",
    "SweepConfig",
    "SweepResult",
    "TensorSumInstance",
    "TwoTermSharpness",
    "aggregate_certificate",
    "anticommutator",
    "as_operator",
    "build_certificate_report",
    "build_report",
    "chain_graph",
    "check_domination",
    "chsh_identity_residual",
    "clifford_generators",
    "commutator",
    "complete_bound",
    "complete_graph",
    "counting_certificate",
    "cycle_graph",
    "exact_reference",
    "excess_mass",
    "graph_constant",
    "hermitian_eig",
    "instance_from_dict",
    "instance_to_dict",
    "kron",
    "load_instance",
    "non_edges",
    "pauli",
    "phi_table",
    "phi_threshold_certificate",
    "random_graph_min_degree_one",
    "random_operator",
    "require_domination",
    "run_sweep",
    "save_instance",
    "sparse_bound",
    "spectral_norm",
    "star_graph",
    "two_term_sharpness",
    "validate",
    "weighted_edge_sum",
    "weighted_pair_sum",
]
