from hp0.module.fibers import (
    FreenessCertificate,
    FreenessError,
    Specialization,
    central_fiber_dims,
    central_fiber_spans,
    fiber_dimension,
    freeness_certificate,
    random_lambda,
)
from hp0.module.oracle import bracket, invariant_bracket_oracle, invariant_monomials
from hp0.module.presentation import (
    DegenerationReport,
    DegreeComparison,
    Quotient,
    SufficiencyReport,
    circuit_sufficiency_check,
    degeneration_check,
    hp0_hilbert,
    j_generators,
    quotient_hilbert,
    relation_span,
    relation_spans,
)

__all__ = [
    "DegenerationReport",
    "DegreeComparison",
    "FreenessCertificate",
    "FreenessError",
    "Quotient",
    "Specialization",
    "SufficiencyReport",
    "bracket",
    "central_fiber_dims",
    "central_fiber_spans",
    "circuit_sufficiency_check",
    "degeneration_check",
    "fiber_dimension",
    "freeness_certificate",
    "hp0_hilbert",
    "invariant_bracket_oracle",
    "invariant_monomials",
    "j_generators",
    "quotient_hilbert",
    "random_lambda",
    "relation_span",
    "relation_spans",
]
