from hp0.poly.monomial import (
    Monomial,
    MonomialError,
    Poly,
    apply_derivation,
    grlex_compare,
    grlex_key,
    linear_form,
    monomials,
    monomials_upto,
    support,
)
from hp0.poly.hilbert import HilbertFunction, hilbert_expansion, trim
from hp0.poly.span import GradedSpan, SpanError, leading_monomials, rank_in, span_insert

__all__ = [
    "GradedSpan",
    "HilbertFunction",
    "Monomial",
    "MonomialError",
    "Poly",
    "SpanError",
    "apply_derivation",
    "grlex_compare",
    "grlex_key",
    "hilbert_expansion",
    "leading_monomials",
    "linear_form",
    "monomials",
    "monomials_upto",
    "rank_in",
    "span_insert",
    "support",
    "trim",
]
