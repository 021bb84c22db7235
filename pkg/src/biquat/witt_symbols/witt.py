"""Truncated 2-typical Witt vectors over fields of characteristic 2.

Addition and negation polynomials are derived once per length from ghost
components w_k = sum_i 2^i X_i^(2^(k-i)) over the integers and reduced mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import sympy

MAX_LENGTH = 6


class LengthMismatch(ValueError):
    """Witt vectors of different lengths were combined."""


def _ghost(xs, k):
    return sum(2 ** i * xs[i] ** (2 ** (k - i)) for i in range(k + 1))


def _solve_ghost(target_ghost, n):
    """Integral polynomials S_0..S_{n-1} with ghost components ``target_ghost``."""
    S = []
    for k in range(n):
        rest = sum(2 ** i * S[i] ** (2 ** (k - i)) for i in range(k))
        S.append(sympy.expand((target_ghost[k] - rest) / 2 ** k))
    return S


def _mod2_terms(expr, gens):
    """Monomials (exponent tuples) of expr with odd integer coefficients."""
    poly = sympy.Poly(expr, *gens, domain="QQ")
    out = []
    for monom, coeff in poly.terms():
        if coeff.q != 1:
            raise AssertionError("Witt polynomial with non-integral coefficient")
        if coeff.p % 2:
            out.append(monom)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def addition_polynomials(n: int) -> tuple:
    """For each k, monomials in (X_0..X_{n-1}, Y_0..Y_{n-1}) of S_k mod 2."""
    if not 1 <= n <= MAX_LENGTH:
        raise ValueError(f"Witt length must lie in 1..{MAX_LENGTH}")
    X = sympy.symbols(f"X0:{n}")
    Y = sympy.symbols(f"Y0:{n}")
    S = _solve_ghost([_ghost(X, k) + _ghost(Y, k) for k in range(n)], n)
    return tuple(_mod2_terms(s, X + Y) for s in S)


@lru_cache(maxsize=None)
def negation_polynomials(n: int) -> tuple:
    if not 1 <= n <= MAX_LENGTH:
        raise ValueError(f"Witt length must lie in 1..{MAX_LENGTH}")
    X = sympy.symbols(f"X0:{n}")
    N = _solve_ghost([-_ghost(X, k) for k in range(n)], n)
    return tuple(_mod2_terms(s, X) for s in N)


def _evaluate(terms, values, zero):
    total = zero
    for monom in terms:
        term = None
        for v, e in zip(values, monom):
            if e:
                p = v ** e
                term = p if term is None else term * p
        total = total + (term if term is not None else zero.field.one_element)
    return total


@dataclass(frozen=True)
class WittVector:
    coords: tuple

    def __post_init__(self):
        cs = tuple(self.coords)
        if not cs:
            raise ValueError("a Witt vector has length at least 1")
        F = cs[0].field
        if any(c.field != F for c in cs):
            raise ValueError("coordinates over different fields")
        object.__setattr__(self, "coords", cs)

    @property
    def field(self):
        return self.coords[0].field

    @property
    def length(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    @classmethod
    def zero(cls, F, n: int) -> "WittVector":
        return cls(tuple(F.zero_element for _ in range(n)))

    @classmethod
    def teichmuller_like(cls, x, n: int) -> "WittVector":
        """(x, 0, ..., 0)."""
        F = x.field
        return cls((x,) + tuple(F.zero_element for _ in range(n - 1)))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def truncate(self, m: int) -> "WittVector":
        if not 1 <= m <= self.length:
            raise ValueError("truncation length out of range")
        return WittVector(self.coords[:m])

    def __add__(self, other: "WittVector") -> "WittVector":
        return witt_add(self, other)

    def __neg__(self) -> "WittVector":
        return witt_neg(self)

    def __sub__(self, other: "WittVector") -> "WittVector":
        return witt_add(self, witt_neg(other))

    def __str__(self) -> str:
        return "(" + "; ".join(str(c) for c in self.coords) + ")"

    def to_json(self) -> list:
        return [str(c) for c in self.coords]

    @classmethod
    def from_json(cls, F, data) -> "WittVector":
        return cls(tuple(F(c) for c in data))

    @classmethod
    def parse(cls, text: str, F) -> "WittVector":
        from ..syntax import parse_witt_text

        return cls(tuple(parse_witt_text(text, F)))


def witt_add(u: WittVector, v: WittVector) -> WittVector:
    if u.length != v.length:
        raise LengthMismatch(f"lengths {u.length} and {v.length} differ")
    if u.field != v.field:
        raise ValueError("Witt vectors over different fields")
    values = u.coords + v.coords
    zero = u.field.zero_element
    return WittVector(tuple(_evaluate(t, values, zero) for t in addition_polynomials(u.length)))


def witt_neg(u: WittVector) -> WittVector:
    zero = u.field.zero_element
    return WittVector(tuple(_evaluate(t, u.coords, zero) for t in negation_polynomials(u.length)))


def solve_e_coords(a2, c2) -> WittVector:
    """(c2, e_2, ..., e_n) with (a2, 0, ..., 0) + (c2, e_2, ..., e_n) = (a2 + c2, 0, ..., 0).

    ``c2`` is a Witt vector whose first coordinate is used; the rest are the
    unknowns.  Coordinate k of a sum is X_k + Y_k plus terms in lower
    coordinates, so each e_k follows from the previous ones.
    """
    n = c2.length
    F = c2.field
    zero = F.zero_element
    lhs = WittVector.teichmuller_like(a2, n)
    polys = addition_polynomials(n)
    coords = [c2[0]]
    for k in range(1, n):
        trial = coords + [zero] * (n - k)
        # the sum's coordinate k equals Y_k + (terms without Y_k); aim at 0
        s_k = _evaluate(polys[k], lhs.coords + tuple(trial), zero)
        coords.append(s_k)
    out = WittVector(tuple(coords))
    target = WittVector.teichmuller_like(a2 + c2[0], n)
    assert witt_add(lhs, out) == target, "triangular solve failed"
    assert out == witt_add(target, witt_neg(lhs)), "solution is not unique"
    return out


__all__ = ["WittVector", "LengthMismatch", "witt_add", "witt_neg", "solve_e_coords",
           "addition_polynomials", "negation_polynomials", "MAX_LENGTH"]
