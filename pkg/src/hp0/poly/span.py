"""Per-degree subspaces of polynomials held in fully reduced row echelon form.

Columns are the degree-d monomials in graded-lex descending order, so the pivot
of every basis row is its leading monomial and the pivot set is exactly the
initial space of the subspace in that degree.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from hp0.matroid.frame import to_fraction
from hp0.poly.monomial import Monomial, Poly, grlex_key, monomials


class SpanError(ValueError):
    """A polynomial of the wrong degree was offered to a GradedSpan."""


@dataclass(frozen=True)
class GradedSpan:
    degree: int
    n: int
    basis: tuple[Poly, ...] = ()

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def leading(self) -> frozenset[Monomial]:
        return frozenset(p.leading() for p in self.basis)

    def pivots(self) -> dict[Monomial, Poly]:
        return {p.leading(): p for p in self.basis}

    def reduce(self, p: Poly) -> Poly:
        """Normal form of p: no pivot monomial survives."""
        self._check(p)
        piv = self.pivots()
        out = p
        for m, c in p.terms.items():
            if m in piv:
                out = out - piv[m].scale(c)
        return out

    def contains(self, p: Poly) -> bool:
        return not self.reduce(p)

    def standard_monomials(self) -> tuple[Monomial, ...]:
        """Degree-d monomials that are not leading monomials, graded-lex descending."""
        lead = self.leading
        return tuple(m for m in monomials(self.n, self.degree) if m not in lead)

    def _check(self, p: Poly) -> None:
        if p and p.degrees() != {self.degree}:
            raise SpanError(f"expected homogeneous degree {self.degree}, got degrees {sorted(p.degrees())}")

    @classmethod
    def from_polys(cls, degree: int, n: int, polys: Iterable[Poly]) -> "GradedSpan":
        """Bulk construction through a sparse exact RREF over QQ."""
        span = cls(degree, n)
        rows = [p for p in polys if p]
        for p in rows:
            span._check(p)
        if not rows:
            return span
        cols = monomials(n, degree)
        reduced = rref_rows(rows, cols)
        basis = tuple(sorted(reduced, key=lambda p: grlex_key(p.leading()), reverse=True))
        return cls(degree, n, basis)

    @classmethod
    def of_monomials(cls, degree: int, n: int, mons: Iterable[Monomial]) -> "GradedSpan":
        """Span of monomials; already in reduced echelon form."""
        ordered = sorted(set(mons), key=grlex_key, reverse=True)
        return cls(degree, n, tuple(Poly.monomial(m) for m in ordered))


def span_insert(span: GradedSpan, p: Poly) -> GradedSpan:
    """Add p to the span, keeping full reduced echelon form. Returns a new span."""
    r = span.reduce(p)
    if not r:
        return span
    lead = r.leading()
    r = r.scale(1 / r.terms[lead])
    basis = [b - r.scale(b.terms[lead]) if lead in b.terms else b for b in span.basis]
    basis.append(r)
    basis.sort(key=lambda b: grlex_key(b.leading()), reverse=True)
    return GradedSpan(span.degree, span.n, tuple(basis))


def leading_monomials(span: GradedSpan) -> frozenset[Monomial]:
    return span.leading


def _matrix(polys: Sequence[Poly], cols: Sequence[Monomial]) -> DomainMatrix:
    index = {m: j for j, m in enumerate(cols)}
    dok = {
        (i, index[m]): QQ(c.numerator, c.denominator) for i, p in enumerate(polys) for m, c in p.terms.items()
    }
    return DomainMatrix.from_dok(dok, (len(polys), len(cols)), QQ)


def rref_rows(polys: Sequence[Poly], cols: Sequence[Monomial]) -> list[Poly]:
    """Nonzero rows of the RREF of ``polys`` written in the column basis ``cols``."""
    reduced, pivots = _matrix(polys, cols).rref()
    rows: list[dict[Monomial, Fraction]] = [{} for _ in pivots]
    for (i, j), v in reduced.to_dok().items():
        if i < len(pivots):
            rows[i][cols[j]] = to_fraction(v)
    return [Poly(r) for r in rows]


def rank_in(polys: Sequence[Poly], cols: Sequence[Monomial]) -> int:
    """Rank of ``polys`` written in the column basis ``cols`` (need not be homogeneous)."""
    polys = [p for p in polys if p]
    if not polys:
        return 0
    return _matrix(polys, cols).rank()
