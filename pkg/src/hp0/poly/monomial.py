"""Monomials, the graded-lex order (e1 > e2 > ... > en) and sparse rational polynomials."""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

Monomial = tuple[int, ...]


class MonomialError(ValueError):
    """Monomials of different lengths were compared or combined."""


def grlex_key(m: Monomial) -> tuple[int, Monomial]:
    """Sort key: total degree first, then lexicographic with e1 largest."""
    return (sum(m), m)


def grlex_compare(a: Monomial, b: Monomial) -> int:
    if len(a) != len(b):
        raise MonomialError(f"length mismatch: {len(a)} vs {len(b)}")
    ka, kb = grlex_key(a), grlex_key(b)
    return (ka > kb) - (ka < kb)


def support(m: Monomial) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(m) if e)


@lru_cache(maxsize=1024)
def monomials(n: int, degree: int) -> tuple[Monomial, ...]:
    """All degree-d monomials in n variables, graded-lex descending."""
    if degree < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(n), degree):
        m = [0] * n
        for i in combo:
            m[i] += 1
        out.append(tuple(m))
    return tuple(sorted(out, key=grlex_key, reverse=True))


def monomials_upto(n: int, degree: int) -> tuple[Monomial, ...]:
    """All monomials of degree <= d, graded-lex descending."""
    return tuple(m for d in range(degree, -1, -1) for m in monomials(n, d))


def multiply(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def indicator(n: int, positions: Iterable[int]) -> Monomial:
    chosen = set(positions)
    return tuple(int(i in chosen) for i in range(n))


@dataclass(frozen=True)
class Poly:
    """Finite map monomial -> nonzero Fraction. All monomials share one length."""

    terms: Mapping[Monomial, Fraction] = field(default_factory=dict)

    @classmethod
    def of(cls, terms: Mapping[Monomial, int | Fraction]) -> "Poly":
        return cls({m: Fraction(c) for m, c in terms.items() if c})

    @classmethod
    def monomial(cls, m: Monomial, coeff: int | Fraction = 1) -> "Poly":
        return cls.of({m: coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c: int | Fraction) -> "Poly":
        if not c:
            return Poly()
        return Poly({m: v * c for m, v in self.terms.items()})

    def times_monomial(self, m: Monomial) -> "Poly":
        return Poly({multiply(t, m): c for t, c in self.terms.items()})

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def leading(self) -> Monomial:
        """Graded-lex largest monomial; the zero polynomial has none."""
        return max(self.terms, key=grlex_key)

    def ordered_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def render(self) -> str:
        """Debug form, graded-lex descending: ``-1*e1 + 1*e2``."""
        if not self.terms:
            return "0"
        return " + ".join(_render_term(m, c) for m, c in self.ordered_terms())


def _render_term(m: Monomial, c: Fraction) -> str:
    factors = [f"e{i + 1}" if e == 1 else f"e{i + 1}^{e}" for i, e in enumerate(m) if e]
    return "*".join([str(c), *factors])


def apply_derivation(alpha: Sequence[int], beta: Monomial) -> Poly:
    """Leibniz rule: sum_i alpha_i * beta_i * e^(beta - eps_i)."""
    if len(alpha) != len(beta):
        raise MonomialError(f"length mismatch: {len(alpha)} vs {len(beta)}")
    terms: dict[Monomial, Fraction] = {}
    for i, (a, b) in enumerate(zip(alpha, beta)):
        if a and b:
            m = beta[:i] + (b - 1,) + beta[i + 1 :]
            terms[m] = Fraction(a * b)
    return Poly(terms)


def linear_form(coeffs: Sequence[int | Fraction]) -> Poly:
    n = len(coeffs)
    return Poly.of({indicator(n, [i]): c for i, c in enumerate(coeffs)})
