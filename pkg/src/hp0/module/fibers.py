"""Central and generic fibers of the Sym g-module, and freeness certificates."""

import random
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from hp0.matroid import GaleFrame, LocalFrame, problem_of
from hp0.module.presentation import Quotient, quotient_hilbert, relation_spans
from hp0.poly import (
    GradedSpan,
    HilbertFunction,
    Monomial,
    Poly,
    hilbert_expansion,
    linear_form,
    monomials,
    monomials_upto,
    rank_in,
    trim,
)
from hp0.poly.monomial import indicator


class FreenessError(Exception):
    """The freeness certificate could not be issued. ``degree`` is the first offending degree, if any."""

    def __init__(self, message: str, degree: int | None = None):
        self.degree = degree
        super().__init__(message)


def _forms(problem: LocalFrame) -> list[Poly]:
    return [p for p in (linear_form(row) for row in problem.forms) if p]


def central_fiber_spans(
    source: GaleFrame | LocalFrame, d_max: int, quotient: Quotient = Quotient.J
) -> tuple[GradedSpan, ...]:
    """Relations of the quotient by J (or the SR module) plus the ideal of the linear forms, per degree."""
    problem = problem_of(source)
    spans = relation_spans(problem, d_max, quotient)
    forms = _forms(problem)
    out = []
    for d in range(d_max + 1):
        extra = [form.times_monomial(m) for m in monomials(problem.n, d - 1) for form in forms]
        out.append(GradedSpan.from_polys(d, problem.n, [*spans[d].basis, *extra]))
    return tuple(out)


def central_fiber_dims(
    source: GaleFrame | LocalFrame, d_max: int, quotient: Quotient = Quotient.J
) -> HilbertFunction:
    """Graded dimensions of C[e] / (J + m C[e]), m spanned by the linear forms of g."""
    problem = problem_of(source)
    spans = central_fiber_spans(problem, d_max, quotient)
    return HilbertFunction(tuple(len(monomials(problem.n, d)) - spans[d].dimension for d in range(d_max + 1)))


@dataclass(frozen=True)
class FreenessCertificate:
    """Hilbert series equals h_poly(t)/(1-t)^k in every degree up to ``verified_to``."""

    basis_monomials: tuple[Monomial, ...]
    h_poly: tuple[int, ...]
    k: int
    verified_to: int


def freeness_certificate(
    source: GaleFrame | LocalFrame, d_max: int, quotient: Quotient = Quotient.J
) -> FreenessCertificate:
    problem = problem_of(source)
    central = central_fiber_dims(problem, d_max, quotient).dims
    vanish = next((d for d in range(d_max) if central[d] == 0 and central[d + 1] == 0), None)
    if vanish is None:
        raise FreenessError(f"central fiber does not vanish in two consecutive degrees up to {d_max}; raise d_max")
    h_poly = trim(central[:vanish])
    hilbert = quotient_hilbert(problem, d_max, quotient).dims
    expected = hilbert_expansion(h_poly, problem.k, d_max)
    for d, (got, want) in enumerate(zip(hilbert, expected)):
        if got != want:
            raise FreenessError(f"degree {d}: Hilbert function {got} != {want} from h(t)/(1-t)^{problem.k}", d)
    spans = central_fiber_spans(problem, d_max, quotient)
    basis = tuple(m for d in range(vanish) for m in spans[d].standard_monomials())
    return FreenessCertificate(basis, h_poly, problem.k, d_max)


@dataclass(frozen=True)
class Specialization:
    """Dimension of the degree <= truncation quotient at lambda, next to the value one degree lower."""

    lam: tuple[Fraction, ...]
    truncation: int
    dim: int
    previous: int | None
    seed: int | None = None

    @property
    def stabilized(self) -> bool:
        return self.previous is not None and self.previous == self.dim


def _truncated_dimension(problem: LocalFrame, lam: Sequence[Fraction], bound: int) -> int:
    cols = monomials_upto(problem.n, bound)
    spans = relation_spans(problem, bound, Quotient.J)
    rows = [p for d in range(bound + 1) for p in spans[d].basis]
    constants = indicator(problem.n, [])
    shifted = [linear_form(row) - Poly.monomial(constants, value) for row, value in zip(problem.forms, lam)]
    rows.extend(p.times_monomial(m) for m in monomials_upto(problem.n, bound - 1) for p in shifted if p)
    return len(cols) - rank_in(rows, cols)


def fiber_dimension(
    frame: GaleFrame, lam: Sequence[Fraction | int], truncation: int, seed: int | None = None
) -> Specialization:
    """Dimension of the specialization at lambda, truncated to degree <= D; stabilized if D-1 agrees."""
    if len(lam) != frame.k:
        raise ValueError(f"lambda has {len(lam)} entries, frame has k={frame.k}")
    lam = tuple(Fraction(v) for v in lam)
    problem = problem_of(frame)
    dim = _truncated_dimension(problem, lam, truncation)
    previous = _truncated_dimension(problem, lam, truncation - 1) if truncation >= 1 else None
    return Specialization(lam, truncation, dim, previous, seed)


def random_lambda(k: int, seed: int) -> tuple[Fraction, ...]:
    """Small rational point of g*, reproducible from the seed."""
    rng = random.Random(seed)
    return tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(k))
