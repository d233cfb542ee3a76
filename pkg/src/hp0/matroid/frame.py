"""The Gale frame: the integer matrix of the character pullback, validated on construction."""

from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix


class FrameError(Exception):
    """Raised when a matrix cannot serve as a Gale frame (shape, rank, parse errors)."""


class NotUnimodularError(FrameError):
    """Raised when some square minor lies outside {-1, 0, 1}.

    ``rows`` and ``cols`` are the 0-based indices of the offending minor.
    """

    def __init__(self, rows: tuple[int, ...], cols: tuple[int, ...], value: int):
        self.rows = rows
        self.cols = cols
        self.value = value
        super().__init__(
            f"not totally unimodular: minor on rows {_one_based(rows)} and columns {_one_based(cols)} equals {value}"
        )


def _one_based(indices: Sequence[int]) -> str:
    return "{" + ",".join(str(i + 1) for i in indices) + "}"


def qq_matrix(rows: Sequence[Sequence[int | Fraction]], ncols: int) -> DomainMatrix:
    """Sparse DomainMatrix over QQ from a dense list of rows."""
    dok = {
        (i, j): QQ(Fraction(v).numerator, Fraction(v).denominator)
        for i, row in enumerate(rows)
        for j, v in enumerate(row)
        if v
    }
    return DomainMatrix.from_dok(dok, (len(rows), ncols), QQ)


def to_fraction(value) -> Fraction:
    """Convert a QQ/ZZ domain element (gmpy or pure-python flavour) to Fraction."""
    return Fraction(int(value.numerator), int(value.denominator))


def find_bad_minor(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], tuple[int, ...], int] | None:
    """First square minor (by size, then row/column subsets) outside {-1, 0, 1}, or None."""
    k = len(rows)
    n = len(rows[0]) if rows else 0
    for size in range(1, min(k, n) + 1):
        for rsel in combinations(range(k), size):
            for csel in combinations(range(n), size):
                if size == 1:
                    det = rows[rsel[0]][csel[0]]
                else:
                    sub = [[ZZ(rows[r][c]) for c in csel] for r in rsel]
                    det = int(DomainMatrix(sub, (size, size), ZZ).det())
                if det not in (-1, 0, 1):
                    return rsel, csel, det
    return None


def check_total_unimodularity(frame: "GaleFrame | Sequence[Sequence[int]]") -> bool:
    """True iff every square minor is -1, 0 or 1. Accepts raw rows so invalid matrices can be tested."""
    rows = frame.rows if isinstance(frame, GaleFrame) else frame
    return find_bad_minor(rows) is None


class GaleFrame(BaseModel):
    """k x n integer matrix of the pullback X(T^n) -> X(G); columns index the coordinates."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=0)
    n: int = Field(ge=1)
    rows: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _validate(self) -> "GaleFrame":
        if len(self.rows) != self.k:
            raise FrameError(f"expected {self.k} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows, 1):
            if len(row) != self.n:
                raise FrameError(f"row {i}: expected {self.n} entries, got {len(row)}")
        if self.k and qq_matrix(self.rows, self.n).rank() != self.k:
            raise FrameError(f"rows are not linearly independent (rank < {self.k})")
        if (bad := find_bad_minor(self.rows)) is not None:
            raise NotUnimodularError(*bad)
        return self

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n: int | None = None) -> "GaleFrame":
        rows = tuple(tuple(r) for r in rows)
        if n is None:
            if not rows:
                raise FrameError("cannot infer column count of an empty frame")
            n = len(rows[0])
        return cls(k=len(rows), n=n, rows=rows)

    @classmethod
    def identity(cls, n: int) -> "GaleFrame":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(row[i] for row in self.rows)

    @property
    def loops(self) -> frozenset[int]:
        """Zero columns. They are allowed and force every quotient to vanish."""
        return frozenset(i for i in range(self.n) if not any(self.column(i)))

    def permuted(self, order: Sequence[int]) -> "GaleFrame":
        """Frame whose column j is column ``order[j]`` of this one (0-based)."""
        if sorted(order) != list(range(self.n)):
            raise FrameError(f"ordering must be a permutation of 1..{self.n}")
        return GaleFrame(k=self.k, n=self.n, rows=tuple(tuple(row[i] for i in order) for row in self.rows))


@lru_cache(maxsize=65536)
def column_rank(frame: GaleFrame, cols: frozenset[int]) -> int:
    """Rank over QQ of the columns ``cols``."""
    if not cols or not frame.k:
        return 0
    ordered = sorted(cols)
    return qq_matrix([[row[c] for c in ordered] for row in frame.rows], len(ordered)).rank()


def closure(frame: GaleFrame, cols: frozenset[int]) -> frozenset[int]:
    """All columns lying in the rational span of ``cols``."""
    r = column_rank(frame, cols)
    return cols | frozenset(i for i in range(frame.n) if i not in cols and column_rank(frame, cols | {i}) == r)


def dense_rows(matrix: DomainMatrix) -> list[list[Fraction]]:
    """Rows of a QQ DomainMatrix as lists of Fractions."""
    nrows, ncols = matrix.shape
    out = [[Fraction(0)] * ncols for _ in range(nrows)]
    for (i, j), v in matrix.to_dok().items():
        out[i][j] = to_fraction(v)
    return out
