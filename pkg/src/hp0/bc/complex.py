"""Broken circuit complexes, independence complexes and their f/h-vectors.

The Stanley-Reisner quotient of the broken circuit complex is the flat
degeneration of the Poisson homology presentation; its h-vector gives the
intersection cohomology Betti numbers of the dual hypertoric variety.
"""

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from hp0.matroid import GaleFrame, LocalFrame, column_rank, dual_frame, problem_of
from hp0.poly import GradedSpan, HilbertFunction, hilbert_expansion, monomials, support


class ConsistencyError(Exception):
    """Face counting disagreed with the h-vector expansion: an implementation bug."""


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward closed family of vertex sets. No faces at all means the void complex."""

    vertices: tuple[int, ...]
    faces: frozenset[frozenset[int]]

    @property
    def void(self) -> bool:
        return not self.faces

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1

    @property
    def facets(self) -> tuple[frozenset[int], ...]:
        maximal = [f for f in self.faces if not any(f < g for g in self.faces)]
        return tuple(sorted(maximal, key=lambda f: (len(f), sorted(f))))

    def __contains__(self, face: Iterable[int]) -> bool:
        return frozenset(face) in self.faces


@dataclass(frozen=True)
class FHVectors:
    f: tuple[int, ...]
    h: tuple[int, ...]


def _grow(n: int, is_face: Callable[[frozenset[int]], bool]) -> frozenset[frozenset[int]]:
    """All faces of a downward closed family, found by extending faces with larger vertices."""
    if not is_face(frozenset()):
        return frozenset()
    faces = {frozenset()}
    stack = [(frozenset(), -1)]
    while stack:
        face, top = stack.pop()
        for v in range(top + 1, n):
            cand = face | {v}
            if is_face(cand):
                faces.add(cand)
                stack.append((cand, v))
    return frozenset(faces)


def broken_circuits(source: GaleFrame | LocalFrame) -> tuple[frozenset[int], ...]:
    """Each circuit support minus its largest element, deduplicated."""
    problem = problem_of(source)
    out = set()
    for coeffs in problem.circuits:
        supp = sorted(i for i, c in enumerate(coeffs) if c)
        out.add(frozenset(supp[:-1]))
    return tuple(sorted(out, key=lambda s: (len(s), sorted(s))))


@lru_cache(maxsize=256)
def _bc_faces(problem: LocalFrame) -> SimplicialComplex:
    blockers = broken_circuits(problem)
    faces = _grow(problem.n, lambda s: not any(b <= s for b in blockers))
    return SimplicialComplex(tuple(range(problem.n)), faces)


def bc_faces(source: GaleFrame | LocalFrame) -> SimplicialComplex:
    return _bc_faces(problem_of(source))


def independence_complex(frame: GaleFrame) -> SimplicialComplex:
    faces = _grow(frame.n, lambda s: column_rank(frame, s) == len(s))
    return SimplicialComplex(tuple(range(frame.n)), faces)


def fh_vectors(cx: SimplicialComplex, d: int) -> FHVectors:
    """f = (f_-1, ..., f_{d-1}) and h_j = sum_i (-1)^(j-i) C(d-i, j-i) f_{i-1}."""
    if cx.void:
        return FHVectors((), ())
    if cx.dimension + 1 > d:
        raise ValueError(f"complex of dimension {cx.dimension} does not fit rank {d}")
    f = [0] * (d + 1)
    for face in cx.faces:
        f[len(face)] += 1
    h = tuple(sum((-1) ** (j - i) * comb(d - i, j - i) * f[i] for i in range(j + 1)) for j in range(d + 1))
    return FHVectors(tuple(f), h)


def h_vector(source: GaleFrame | LocalFrame) -> tuple[int, ...]:
    """h-vector of the broken circuit complex, taken with d = rank."""
    problem = problem_of(source)
    return fh_vectors(bc_faces(problem), problem.k).h


def sr_quotient_dims(source: GaleFrame | LocalFrame, d_max: int) -> HilbertFunction:
    """Number of degree-d monomials whose support is a face of the broken circuit complex."""
    problem = problem_of(source)
    cx = bc_faces(problem)
    dims = []
    for d in range(d_max + 1):
        if d == 0:
            dims.append(int(not cx.void))
        else:
            dims.append(sum(comb(d - 1, len(face) - 1) for face in cx.faces if face))
    expected = hilbert_expansion(h_vector(problem), problem.k, d_max)
    if tuple(dims) != expected:
        raise ConsistencyError(f"face count {dims} disagrees with h(t)/(1-t)^{problem.k} = {list(expected)}")
    return HilbertFunction(tuple(dims))


def sr_span(source: GaleFrame | LocalFrame, degree: int) -> GradedSpan:
    """Degree-d part of the Stanley-Reisner module: monomials whose support is not a face."""
    problem = problem_of(source)
    cx = bc_faces(problem)
    return GradedSpan.of_monomials(
        degree, problem.n, (m for m in monomials(problem.n, degree) if support(m) not in cx.faces)
    )


@dataclass(frozen=True)
class IHBetti:
    """h_i is dim IH^{2i} of the dual variety; ``series`` is the equivariant Hilbert series h(t)/(1-t)^k."""

    h: tuple[int, ...]
    k: int
    series: tuple[int, ...]

    def betti(self, paper_degrees: bool = True) -> dict[int, int]:
        return {(2 * i if paper_degrees else i): v for i, v in enumerate(self.h) if v}

    def equivariant(self, paper_degrees: bool = True) -> dict[int, int]:
        return {(2 * d if paper_degrees else d): v for d, v in enumerate(self.series)}


def ih_betti_report(frame: GaleFrame, d_max: int) -> IHBetti:
    h = h_vector(frame)
    return IHBetti(h=h, k=frame.k, series=hilbert_expansion(h, frame.k, d_max))


@dataclass(frozen=True)
class DualTopH:
    bc_sum: int
    dual_top: int

    @property
    def ok(self) -> bool:
        return self.bc_sum == self.dual_top


def dual_top_h_check(frame: GaleFrame) -> DualTopH:
    """Sum of the broken circuit h-numbers against the top h-number of the dual independence complex."""
    dual = dual_frame(frame)
    d = frame.n - frame.k
    dual_h = fh_vectors(independence_complex(dual), d).h
    return DualTopH(bc_sum=sum(h_vector(frame)), dual_top=dual_h[d])
