"""Lattice of flats, ordered by inclusion of closed column sets, and localization at a flat."""

from dataclasses import dataclass
from functools import lru_cache

from hp0.matroid.circuits import signed_circuits
from hp0.matroid.frame import GaleFrame, closure, column_rank


class FlatError(Exception):
    """Raised when a column set is not closed in the frame's matroid."""


@dataclass(frozen=True)
class Flat:
    columns: frozenset[int]
    rank: int

    def label(self) -> str:
        """1-based column list, e.g. ``{1,3}``."""
        return "{" + ",".join(str(i + 1) for i in sorted(self.columns)) + "}"

    def sort_key(self) -> tuple:
        return (self.rank, len(self.columns), sorted(self.columns))


@dataclass(frozen=True)
class FlatLattice:
    """Flats in a linear extension order (rank first) with the comparable pairs (i, j), flats[i] <= flats[j]."""

    flats: tuple[Flat, ...]
    order: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.flats)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.flats) - 1

    def index(self, flat: Flat | frozenset[int]) -> int:
        cols = flat.columns if isinstance(flat, Flat) else frozenset(flat)
        for i, f in enumerate(self.flats):
            if f.columns == cols:
                return i
        raise FlatError(f"{sorted(c + 1 for c in cols)} is not a flat")

    def leq(self, i: int, j: int) -> bool:
        return (i, j) in self.order

    def down_set(self, i: int) -> frozenset[int]:
        """The minimal open set U_F containing flats[i]."""
        return frozenset(a for a in range(len(self.flats)) if (a, i) in self.order)

    def meet(self, i: int, j: int) -> int:
        return self.index(self.flats[i].columns & self.flats[j].columns)


@lru_cache(maxsize=256)
def flats(frame: GaleFrame) -> FlatLattice:
    """All closed column sets, grown from closure(empty) by adding one column at a time."""
    start = closure(frame, frozenset())
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for cols in frontier:
            for i in range(frame.n):
                if i in cols:
                    continue
                grown = closure(frame, cols | {i})
                if grown not in seen:
                    seen.add(grown)
                    nxt.append(grown)
        frontier = nxt
    ordered = sorted((Flat(c, column_rank(frame, c)) for c in seen), key=Flat.sort_key)
    order = frozenset(
        (i, j) for i, a in enumerate(ordered) for j, b in enumerate(ordered) if a.columns <= b.columns
    )
    return FlatLattice(tuple(ordered), order)


@dataclass(frozen=True)
class LocalFrame:
    """The problem localized at a flat F, in local coordinates 0..|S_F|-1.

    ``ground`` lists the original columns S_F in increasing order, ``k`` is rank(S_F),
    ``circuits`` are the frame's circuits supported in S_F and ``forms`` are the rows
    of the frame restricted to S_F (they span the image of g/F in t^n_F).
    """

    ground: tuple[int, ...]
    k: int
    circuits: tuple[tuple[int, ...], ...]
    forms: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.ground)


def localize(frame: GaleFrame, flat: Flat | frozenset[int]) -> LocalFrame:
    cols = flat.columns if isinstance(flat, Flat) else frozenset(flat)
    if closure(frame, cols) != cols:
        raise FlatError(f"{sorted(c + 1 for c in cols)} is not closed")
    ground = tuple(sorted(cols))
    circuits = tuple(
        tuple(c.coeffs[i] for i in ground) for c in signed_circuits(frame) if c.support <= cols
    )
    forms = tuple(tuple(row[i] for i in ground) for row in frame.rows)
    return LocalFrame(ground=ground, k=column_rank(frame, cols), circuits=circuits, forms=forms)


@lru_cache(maxsize=256)
def as_local(frame: GaleFrame) -> LocalFrame:
    """The whole frame, seen as its localization at the top flat."""
    return localize(frame, frozenset(range(frame.n)))


def problem_of(source: GaleFrame | LocalFrame) -> LocalFrame:
    return as_local(source) if isinstance(source, GaleFrame) else source
