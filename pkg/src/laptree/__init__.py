"""Spectral toolkit for double starlike trees: exact Laplacian spectra,
lemma checkers, and exhaustive determined-by-spectrum verification."""

from .enumeration import (
    DEFAULT_ORDER_CAP,
    candidate_shapes,
    double_starlike_multiset,
    enumerate_free_trees,
    enumerate_trees_with_degree_multiset,
)
from .graphs import (
    CandidateShape,
    DoubleStarlikeParams,
    Graph,
    build_candidate,
    build_double_starlike,
    canonical_form,
    graph6_decode,
    graph6_encode,
    line_graph,
    tree_centers,
)
from .lemmas import (
    BoundCheck,
    DegreeSequenceSolution,
    check_h_bounds,
    check_interlacing_edge,
    check_interlacing_principal,
    check_interlacing_vertex,
    check_lemma6_mu1_bounds,
    check_lemma7_mu2,
    check_lemma8_mu3,
    classify_candidate,
    expected_degree_sequence,
    p3_defect,
    predicted_p3_defect,
    solve_degree_sequences,
)
from .search import (
    DlsReport,
    SearchCheckpoint,
    grid_cells,
    run_grid,
    search_cospectral_mates,
    spectral_fingerprint,
    verify_dls,
)
from .spectra import (
    IntMatrix,
    IntPolynomial,
    SpectrumSummary,
    adjacency_matrix,
    adjacency_spectrum,
    char_poly,
    closed_walks,
    complement_laplacian_charpoly,
    cw4_decomposition,
    eigenvalues,
    is_laplacian_cospectral,
    laplacian_charpoly,
    laplacian_matrix,
    laplacian_spectrum,
    p3_count,
    spectrum_invariants,
)

__version__ = "0.1.0"

__all__ = [
    "BoundCheck",
    "CandidateShape",
    "DEFAULT_ORDER_CAP",
    "DegreeSequenceSolution",
    "DlsReport",
    "DoubleStarlikeParams",
    "Graph",
    "IntMatrix",
    "IntPolynomial",
    "SearchCheckpoint",
    "SpectrumSummary",
    "adjacency_matrix",
    "adjacency_spectrum",
    "build_candidate",
    "build_double_starlike",
    "candidate_shapes",
    "canonical_form",
    "char_poly",
    "check_h_bounds",
    "check_interlacing_edge",
    "check_interlacing_principal",
    "check_interlacing_vertex",
    "check_lemma6_mu1_bounds",
    "check_lemma7_mu2",
    "check_lemma8_mu3",
    "classify_candidate",
    "closed_walks",
    "complement_laplacian_charpoly",
    "cw4_decomposition",
    "double_starlike_multiset",
    "eigenvalues",
    "enumerate_free_trees",
    "enumerate_trees_with_degree_multiset",
    "expected_degree_sequence",
    "graph6_decode",
    "graph6_encode",
    "grid_cells",
    "is_laplacian_cospectral",
    "laplacian_charpoly",
    "laplacian_matrix",
    "laplacian_spectrum",
    "line_graph",
    "p3_count",
    "p3_defect",
    "predicted_p3_defect",
    "run_grid",
    "search_cospectral_mates",
    "solve_degree_sequences",
    "spectral_fingerprint",
    "spectrum_invariants",
    "tree_centers",
    "verify_dls",
]
