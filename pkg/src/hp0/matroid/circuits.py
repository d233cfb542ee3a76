"""Kernel lattice, signed circuits and matroid duality of a Gale frame."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, lcm

from hp0.matroid.frame import GaleFrame, column_rank, dense_rows, qq_matrix


class CircuitError(Exception):
    """A minimal-support kernel vector has an entry outside {-1, 0, 1}."""


@dataclass(frozen=True)
class SignedCircuit:
    """A {-1,0,1} kernel vector of minimal support, lowest nonzero entry +1."""

    coeffs: tuple[int, ...]

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coeffs) if c)

    @property
    def ordered_support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c)


def _primitive(vector: list[Fraction]) -> tuple[int, ...]:
    scale = lcm(*(v.denominator for v in vector)) if vector else 1
    ints = [int(v * scale) for v in vector]
    g = gcd(*ints) or 1
    return tuple(v // g for v in ints)


@lru_cache(maxsize=256)
def kernel_basis(frame: GaleFrame) -> tuple[tuple[int, ...], ...]:
    """Rows spanning the integer kernel lattice of the frame: the Gale-dual frame.

    The nullspace comes from the reduced row echelon form, so each row is the unit
    vector on one free column plus pivot entries; for a unimodular frame those are
    integral and the rows are a lattice basis.
    """
    if frame.k == 0:
        return tuple(tuple(int(i == j) for j in range(frame.n)) for i in range(frame.n))
    if frame.k == frame.n:
        return ()
    return tuple(_primitive(row) for row in dense_rows(qq_matrix(frame.rows, frame.n).nullspace()))


@lru_cache(maxsize=256)
def signed_circuits(frame: GaleFrame) -> tuple[SignedCircuit, ...]:
    """All signed circuits, sorted by (support size, lexicographic support).

    Supports are enumerated by increasing size; a subset is a circuit when its
    columns have nullity one and it contains no circuit already found.
    """
    found: list[SignedCircuit] = []
    supports: list[frozenset[int]] = []
    for size in range(1, frame.k + 2):
        for subset in combinations(range(frame.n), size):
            cols = frozenset(subset)
            if any(s <= cols for s in supports):
                continue
            if column_rank(frame, cols) != size - 1:
                continue
            found.append(_circuit_on(frame, subset))
            supports.append(cols)
    return tuple(found)


def _circuit_on(frame: GaleFrame, subset: tuple[int, ...]) -> SignedCircuit:
    if frame.k == 0:
        local = [Fraction(1)]
    else:
        sub = qq_matrix([[row[c] for c in subset] for row in frame.rows], len(subset))
        local = dense_rows(sub.nullspace())[0]
    vec = _primitive(local)
    if vec[0] < 0:
        vec = tuple(-v for v in vec)
    if any(abs(v) != 1 for v in vec):
        raise CircuitError(f"circuit on columns {[c + 1 for c in subset]} has non-unit entries {vec}")
    coeffs = [0] * frame.n
    for c, v in zip(subset, vec):
        coeffs[c] = v
    return SignedCircuit(tuple(coeffs))


def dual_frame(frame: GaleFrame) -> GaleFrame:
    """The kernel basis packaged as a frame of rank n - k; its circuits are the cocircuits."""
    return GaleFrame(k=frame.n - frame.k, n=frame.n, rows=kernel_basis(frame))


def kirwan_degree2_lines(frame: GaleFrame) -> frozenset[int]:
    """Coloops: indices in no circuit. Nonempty iff the image of g contains a coordinate line."""
    covered = frozenset().union(*(c.support for c in signed_circuits(frame)))
    return frozenset(range(frame.n)) - covered
