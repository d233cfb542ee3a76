"""Brute-force HP0 from the invariant-ring side.

Variables are z_1..z_n, w_1..w_n; a monomial z^b w^c is stored as the pair (b, c).
A monomial is invariant when the frame kills b - c. HP0 in (z,w)-degree 2d is the
span of invariant monomials of that degree modulo brackets of invariant monomials
whose degrees add up to 2d + 2.
"""

from fractions import Fraction
from functools import lru_cache

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from hp0.matroid import GaleFrame
from hp0.parallel import pmap
from hp0.poly import HilbertFunction, monomials

ZW = tuple[tuple[int, ...], tuple[int, ...]]


@lru_cache(maxsize=64)
def invariant_monomials(frame: GaleFrame, degree: int) -> tuple[ZW, ...]:
    """Invariant z^b w^c with |b| + |c| = degree, in a fixed order."""
    n = frame.n
    out = []
    for m in monomials(2 * n, degree):
        b, c = m[:n], m[n:]
        diff = [x - y for x, y in zip(b, c)]
        if all(sum(r * v for r, v in zip(row, diff)) == 0 for row in frame.rows):
            out.append((b, c))
    return tuple(out)


def bracket(f: ZW, g: ZW) -> dict[ZW, int]:
    """{z^a w^b, z^c w^e} = sum_i (a_i e_i - b_i c_i) z^(a+c-eps_i) w^(b+e-eps_i)."""
    (a, b), (c, e) = f, g
    za = tuple(x + y for x, y in zip(a, c))
    wb = tuple(x + y for x, y in zip(b, e))
    out: dict[ZW, int] = {}
    for i in range(len(a)):
        coeff = a[i] * e[i] - b[i] * c[i]
        if not coeff:
            continue
        key = (za[:i] + (za[i] - 1,) + za[i + 1 :], wb[:i] + (wb[i] - 1,) + wb[i + 1 :])
        out[key] = out.get(key, 0) + coeff
    return {k: v for k, v in out.items() if v}


def _normalized(row: dict[ZW, int]) -> tuple[tuple[ZW, Fraction], ...]:
    items = sorted(row.items())
    lead = items[0][1]
    return tuple((k, Fraction(v, lead)) for k, v in items)


def _degree_dimension(frame: GaleFrame, d: int) -> int:
    cols = invariant_monomials(frame, 2 * d)
    if not cols:
        return 0
    index = {m: j for j, m in enumerate(cols)}
    rows: set[tuple[tuple[ZW, Fraction], ...]] = set()
    total = 2 * d + 2
    for s in range(1, total // 2 + 1):
        left = invariant_monomials(frame, s)
        right = invariant_monomials(frame, total - s)
        for f in left:
            for g in right:
                row = bracket(f, g)
                if row:
                    rows.add(_normalized(row))
    if not rows:
        return len(cols)
    dok = {(i, index[m]): QQ(v.numerator, v.denominator) for i, row in enumerate(rows) for m, v in row}
    rank = DomainMatrix.from_dok(dok, (len(rows), len(cols)), QQ).rank()
    return len(cols) - rank


def invariant_bracket_oracle(frame: GaleFrame, d_max: int) -> HilbertFunction:
    """Graded dimensions of HP0 reported at combinatorial degree d = (z,w)-degree / 2."""
    dims = pmap(_degree_dimension, [(frame, d) for d in range(d_max + 1)])
    return HilbertFunction(tuple(dims))
