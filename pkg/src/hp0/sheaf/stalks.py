"""Stalks of the sheaves M (quotient by J_F) and R^bc (Stanley-Reisner) and their restriction maps.

Stalk bases are the standard monomials of each degree, so a restriction map
is the matrix of "kill the variables outside S_F, then take the normal form".
"""

from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from hp0.matroid import Flat, FlatError, GaleFrame, flats, localize
from hp0.module import Quotient, quotient_hilbert, relation_spans
from hp0.parallel import pmap
from hp0.poly import GradedSpan, HilbertFunction, Monomial, Poly


class RestrictionError(Exception):
    """A relation of the larger stalk did not map into the relations of the smaller one."""


@dataclass(frozen=True)
class StalkData:
    flat: Flat
    hilbert: HilbertFunction
    local_k: int
    basis_monomials: tuple[tuple[Monomial, ...], ...]
    spans: tuple[GradedSpan, ...] = field(repr=False, compare=False)


def stalk(frame: GaleFrame, flat: Flat, d_max: int, quotient: Quotient) -> StalkData:
    problem = localize(frame, flat)
    spans = relation_spans(problem, d_max, quotient)
    return StalkData(
        flat=flat,
        hilbert=quotient_hilbert(problem, d_max, quotient),
        local_k=problem.k,
        basis_monomials=tuple(s.standard_monomials() for s in spans),
        spans=spans,
    )


def m_stalk(frame: GaleFrame, flat: Flat, d_max: int) -> StalkData:
    """M(F) = Sym t_F / J_F, computed on the localization at F."""
    return stalk(frame, flat, d_max, Quotient.J)


def rbc_stalk(frame: GaleFrame, flat: Flat, d_max: int) -> StalkData:
    """R^bc(F), the Stanley-Reisner ring of the localized broken circuit complex."""
    return stalk(frame, flat, d_max, Quotient.SR)


@dataclass(frozen=True)
class RestrictionMap:
    """r(F, F'): stalk at ``source`` (F') to stalk at ``target`` (F); matrices[d] is target x source."""

    source: Flat
    target: Flat
    matrices: tuple[DomainMatrix, ...]


def _project(m: Monomial, source_ground: tuple[int, ...], position: dict[int, int]) -> Monomial | None:
    """Set e_i = 0 for i outside the target ground set and rewrite in target coordinates."""
    out = [0] * len(position)
    for e, col in zip(m, source_ground):
        if not e:
            continue
        if col not in position:
            return None
        out[position[col]] = e
    return tuple(out)


def _restrict(p: Poly, source_ground: tuple[int, ...], position: dict[int, int]) -> Poly:
    terms: dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        image = _project(m, source_ground, position)
        if image is not None:
            terms[image] = terms.get(image, 0) + c
    return Poly.of(terms)


def restriction(target: StalkData, source: StalkData) -> RestrictionMap:
    """Build r(target, source) degreewise and check every source relation lands in the target relations."""
    if not target.flat.columns <= source.flat.columns:
        raise FlatError(f"{target.flat.label()} is not below {source.flat.label()}")
    source_ground = tuple(sorted(source.flat.columns))
    position = {col: j for j, col in enumerate(sorted(target.flat.columns))}

    matrices = []
    for d, (src_span, dst_span) in enumerate(zip(source.spans, target.spans)):
        for relation in src_span.basis:
            if not dst_span.contains(_restrict(relation, source_ground, position)):
                raise RestrictionError(
                    f"degree {d}: relation {relation.render()} of {source.flat.label()} "
                    f"does not vanish on {target.flat.label()}"
                )
        rows = {m: i for i, m in enumerate(target.basis_monomials[d])}
        dok = {}
        for j, m in enumerate(source.basis_monomials[d]):
            image = _project(m, source_ground, position)
            if image is None:
                continue
            for t, c in dst_span.reduce(Poly.monomial(image)).terms.items():
                dok[(rows[t], j)] = QQ(c.numerator, c.denominator)
        shape = (len(target.basis_monomials[d]), len(source.basis_monomials[d]))
        matrices.append(DomainMatrix.from_dok(dok, shape, QQ))
    return RestrictionMap(source.flat, target.flat, tuple(matrices))


def _rank(dok: dict, shape: tuple[int, int]) -> int:
    if not dok:
        return 0
    return DomainMatrix.from_dok(dok, shape, QQ).rank()


class SheafModel:
    """One of the two sheaves on the lattice of flats of a frame, truncated at d_max.

    Stalks are computed up front (in parallel when HP0_THREADS allows);
    restriction maps are built on demand and cached.
    """

    def __init__(self, frame: GaleFrame, quotient: Quotient, d_max: int):
        self.frame = frame
        self.quotient = quotient
        self.d_max = d_max
        self.lattice = flats(frame)
        self.stalks: tuple[StalkData, ...] = tuple(
            pmap(stalk, [(frame, f, d_max, quotient) for f in self.lattice.flats])
        )
        self._restrictions: dict[tuple[int, int], RestrictionMap] = {}

    def restriction(self, target: int, source: int) -> RestrictionMap:
        key = (target, source)
        if key not in self._restrictions:
            self._restrictions[key] = restriction(self.stalks[target], self.stalks[source])
        return self._restrictions[key]

    def _size(self, i: int, d: int) -> int:
        return len(self.stalks[i].basis_monomials[d])

    def sections(self, opens: Iterable[int]) -> HilbertFunction:
        """Dimensions of compatible families (s_F) over the open set, one kernel per degree."""
        members = sorted(opens)
        dims = []
        for d in range(self.d_max + 1):
            offset, total = {}, 0
            for i in members:
                offset[i] = total
                total += self._size(i, d)
            dok: dict[tuple[int, int], object] = {}
            row = 0
            for j in members:
                for i in members:
                    if i == j or not self.lattice.leq(i, j):
                        continue
                    block = self.restriction(i, j).matrices[d]
                    for (r, c), v in block.to_dok().items():
                        dok[(row + r, offset[j] + c)] = v
                    for r in range(self._size(i, d)):
                        key = (row + r, offset[i] + r)
                        dok[key] = dok.get(key, QQ(0)) - QQ(1)
                    row += self._size(i, d)
            dims.append(total - _rank(dok, (row, total)))
        return HilbertFunction(tuple(dims))

    def global_image(self, opens: Iterable[int]) -> HilbertFunction:
        """Rank of global sections (the top stalk) restricted to the open set, per degree."""
        members = sorted(opens)
        top = self.lattice.top
        dims = []
        for d in range(self.d_max + 1):
            dok: dict[tuple[int, int], object] = {}
            row = 0
            for i in members:
                for (r, c), v in self.restriction(i, top).matrices[d].to_dok().items():
                    dok[(row + r, c)] = v
                row += self._size(i, d)
            dims.append(_rank(dok, (row, self._size(top, d))))
        return HilbertFunction(tuple(dims))

    def flabby_failures(self, opens: Iterable[frozenset[int]]) -> list[tuple[frozenset[int], int, int, int]]:
        """(U, degree, image rank, section dimension) wherever global sections miss part of S(U)."""
        failures = []
        for u in opens:
            image = self.global_image(u)
            sections = self.sections(u)
            failures.extend((u, d, image[d], sections[d]) for d in range(self.d_max + 1) if image[d] != sections[d])
        return failures

    def functoriality_failures(self) -> list[tuple[int, int, int, int]]:
        """(F, F', F'', degree) where r(F, F'') differs from r(F, F') r(F', F'')."""
        failures = []
        n = len(self.lattice)
        for a in range(n):
            for b in range(n):
                if a == b or not self.lattice.leq(a, b):
                    continue
                for c in range(n):
                    if c == b or not self.lattice.leq(b, c):
                        continue
                    outer = self.restriction(a, b).matrices
                    inner = self.restriction(b, c).matrices
                    direct = self.restriction(a, c).matrices
                    for d in range(self.d_max + 1):
                        if _product_dok(outer[d], inner[d]) != _nonzero_dok(direct[d]):
                            failures.append((a, b, c, d))
        return failures


def _nonzero_dok(m: DomainMatrix) -> dict:
    return {k: v for k, v in m.to_dok().items() if v}


def _product_dok(a: DomainMatrix, b: DomainMatrix) -> dict:
    if 0 in a.shape or 0 in b.shape:
        return {}
    return _nonzero_dok(a.matmul(b))
