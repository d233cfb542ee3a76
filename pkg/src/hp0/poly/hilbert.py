"""Graded dimension sequences and expansions of h(t)/(1-t)^k."""

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import accumulate


@dataclass(frozen=True)
class HilbertFunction:
    """dims[d] in combinatorial degree d (e_i in degree 1; --paper-degrees doubles it on output)."""

    dims: tuple[int, ...]

    def __getitem__(self, d: int) -> int:
        return self.dims[d]

    def __len__(self) -> int:
        return len(self.dims)

    @property
    def is_zero(self) -> bool:
        return not any(self.dims)

    def paper_degrees(self) -> dict[int, int]:
        return {2 * d: v for d, v in enumerate(self.dims)}

    def total(self) -> int:
        return sum(self.dims)


def hilbert_expansion(h: Sequence[int], k: int, d_max: int) -> tuple[int, ...]:
    """Coefficients of t^0..t^d_max in h(t) / (1 - t)^k."""
    coeffs = [h[d] if d < len(h) else 0 for d in range(d_max + 1)]
    for _ in range(k):
        coeffs = list(accumulate(coeffs))
    return tuple(coeffs)


def trim(h: Sequence[int]) -> tuple[int, ...]:
    """Drop trailing zeros."""
    out = list(h)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)
