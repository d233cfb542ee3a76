"""The presentation C[e]/J of degree-zero Poisson homology and its flat degeneration.

J is spanned by the circuit derivations d_alpha e^beta with Supp(alpha) inside
Supp(beta). Everything is computed degree by degree with exact echelon forms.
"""

import random
from dataclasses import dataclass
from enum import StrEnum
from functools import lru_cache

from hp0.bc import sr_span
from hp0.matroid import GaleFrame, LocalFrame, kernel_basis, problem_of, signed_circuits
from hp0.parallel import pmap
from hp0.poly import GradedSpan, HilbertFunction, Monomial, Poly, apply_derivation, monomials
from hp0.poly.monomial import indicator, multiply


class Quotient(StrEnum):
    """Which relations are divided out: J (the Poisson presentation) or the Stanley-Reisner module."""

    J = "m"
    SR = "rbc"


def _derivations(problem: LocalFrame, alpha: tuple[int, ...], degree: int) -> list[Poly]:
    supp = [i for i, c in enumerate(alpha) if c]
    rest = degree + 1 - len(supp)
    if rest < 0:
        return []
    base = indicator(problem.n, supp)
    return [apply_derivation(alpha, multiply(base, gamma)) for gamma in monomials(problem.n, rest)]


def j_generators(source: GaleFrame | LocalFrame, d: int) -> list[Poly]:
    """All d_alpha e^beta of degree d, alpha a signed circuit, |beta| = d + 1, Supp(alpha) in Supp(beta)."""
    problem = problem_of(source)
    return [p for alpha in problem.circuits for p in _derivations(problem, alpha, d)]


def _relation_span(problem: LocalFrame, d: int, quotient: Quotient) -> GradedSpan:
    if quotient is Quotient.SR:
        return sr_span(problem, d)
    return GradedSpan.from_polys(d, problem.n, j_generators(problem, d))


def relation_span(source: GaleFrame | LocalFrame, d: int, quotient: Quotient = Quotient.J) -> GradedSpan:
    return relation_spans(problem_of(source), d, quotient)[d]


@lru_cache(maxsize=512)
def relation_spans(problem: LocalFrame, d_max: int, quotient: Quotient = Quotient.J) -> tuple[GradedSpan, ...]:
    """Relation spans in degrees 0..d_max; degrees are independent and may run in parallel."""
    return tuple(pmap(_relation_span, [(problem, d, quotient) for d in range(d_max + 1)]))


def quotient_hilbert(source: GaleFrame | LocalFrame, d_max: int, quotient: Quotient = Quotient.J) -> HilbertFunction:
    problem = problem_of(source)
    spans = relation_spans(problem, d_max, quotient)
    return HilbertFunction(tuple(len(monomials(problem.n, d)) - spans[d].dimension for d in range(d_max + 1)))


def hp0_hilbert(source: GaleFrame | LocalFrame, d_max: int) -> HilbertFunction:
    """dims[d] = #degree-d monomials - dim J_d."""
    return quotient_hilbert(source, d_max, Quotient.J)


@dataclass(frozen=True)
class DegreeComparison:
    degree: int
    initial: int
    stanley_reisner: int
    equal: bool
    contains: bool


@dataclass(frozen=True)
class DegenerationReport:
    degrees: tuple[DegreeComparison, ...]

    @property
    def ok(self) -> bool:
        return all(c.equal for c in self.degrees)

    @property
    def containment_ok(self) -> bool:
        return all(c.contains for c in self.degrees)


def degeneration_check(source: GaleFrame | LocalFrame, d_max: int) -> DegenerationReport:
    """Compare in(J)_d with the Stanley-Reisner monomials of the broken circuit complex, d <= d_max."""
    problem = problem_of(source)
    spans = relation_spans(problem, d_max, Quotient.J)
    out = []
    for d in range(d_max + 1):
        initial = spans[d].leading
        sr = sr_span(problem, d).leading
        out.append(DegreeComparison(d, len(initial), len(sr), initial == sr, sr <= initial))
    return DegenerationReport(tuple(out))


@dataclass(frozen=True)
class SufficiencyReport:
    vectors: tuple[tuple[int, ...], ...]
    checked: int
    failures: tuple[tuple[tuple[int, ...], Monomial], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def circuit_sufficiency_check(frame: GaleFrame, d_max: int, samples: int = 5, seed: int = 0) -> SufficiencyReport:
    """Derivations along sampled non-circuit kernel vectors must already lie in the circuit span."""
    basis = kernel_basis(frame)
    circuits = {c.coeffs for c in signed_circuits(frame)}
    circuits |= {tuple(-v for v in c) for c in circuits}
    if not basis:
        return SufficiencyReport((), 0, ())

    rng = random.Random(seed)
    vectors: list[tuple[int, ...]] = []
    for _ in range(samples * 20):
        if len(vectors) == samples:
            break
        coeffs = [rng.randint(-2, 2) for _ in basis]
        vec = tuple(sum(c * row[i] for c, row in zip(coeffs, basis)) for i in range(frame.n))
        if any(vec) and vec not in circuits and vec not in vectors:
            vectors.append(vec)

    problem = problem_of(frame)
    spans = relation_spans(problem, d_max, Quotient.J)
    checked = 0
    failures = []
    for vec in vectors:
        supp = [i for i, c in enumerate(vec) if c]
        base = indicator(frame.n, supp)
        for total in range(len(supp), d_max + 2):
            for gamma in monomials(frame.n, total - len(supp)):
                beta = multiply(base, gamma)
                checked += 1
                if not spans[total - 1].contains(apply_derivation(vec, beta)):
                    failures.append((vec, beta))
    return SufficiencyReport(tuple(vectors), checked, tuple(failures))
