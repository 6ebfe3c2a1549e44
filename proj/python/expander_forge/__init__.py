"""Random degree-1/degree-3 graphs: sampling, spectra, Cheeger constants,
first-moment bounds and expander-family construction."""

from ._core import (
    CertificationFailure,
    Error,
    Graph,
    GuardExceeded,
    InternalInconsistency,
    ParityError,
    ParseError,
    PreconditionError,
    balanced_boundary_subset,
    cheeger_exact,
    cheeger_upper,
    complete_graph_k4,
    count_family,
    count_subsets,
    estimate_connectivity,
    expander_family,
    is_mu_pair,
    lambda1,
    laplacian_spectrum,
    mu_pair_sum,
    petersen_graph,
    plant_trees,
    planted_cheeger_bound,
    rng_name,
    sample_graph,
    sample_pairs,
    steklov_spectrum,
    two_tree_split,
    xyz_bound,
)

__version__ = "0.1.0"
