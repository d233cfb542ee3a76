from hp0.bc.complex import (
    ConsistencyError,
    DualTopH,
    FHVectors,
    IHBetti,
    SimplicialComplex,
    bc_faces,
    broken_circuits,
    dual_top_h_check,
    fh_vectors,
    h_vector,
    ih_betti_report,
    independence_complex,
    sr_quotient_dims,
    sr_span,
)

__all__ = [
    "ConsistencyError",
    "DualTopH",
    "FHVectors",
    "IHBetti",
    "SimplicialComplex",
    "bc_faces",
    "broken_circuits",
    "dual_top_h_check",
    "fh_vectors",
    "h_vector",
    "ih_betti_report",
    "independence_complex",
    "sr_quotient_dims",
    "sr_span",
]
