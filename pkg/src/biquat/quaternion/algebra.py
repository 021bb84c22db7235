"""Structure-constant arithmetic in [alpha, beta) on the basis (1, i, j, ij)."""

from __future__ import annotations

from dataclasses import dataclass

from .symbol import QuaternionSymbol


class SymbolMismatch(ValueError):
    """Elements of different presentations were combined."""


@dataclass(frozen=True)
class AlgebraElement:
    symbol: QuaternionSymbol
    coords: tuple

    def __post_init__(self):
        F = self.symbol.field
        cs = tuple(F(c) for c in self.coords)
        if len(cs) != 4:
            raise ValueError("an algebra element has four coordinates")
        object.__setattr__(self, "coords", cs)

    @classmethod
    def scalar(cls, symbol, c) -> "AlgebraElement":
        F = symbol.field
        return cls(symbol, (c, F.zero_element, F.zero_element, F.zero_element))

    @classmethod
    def basis(cls, symbol) -> tuple:
        F = symbol.field
        out = []
        for k in range(4):
            cs = [F.zero_element] * 4
            cs[k] = F.one_element
            out.append(cls(symbol, tuple(cs)))
        return tuple(out)

    def _check(self, other):
        if not isinstance(other, AlgebraElement) or other.symbol != self.symbol:
            raise SymbolMismatch("elements belong to different presentations")

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.symbol, tuple(x + y for x, y in zip(self.coords, other.coords)))

    __sub__ = __add__

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return algebra_mul(self, other)
        c = self.symbol.field(other)
        return AlgebraElement(self.symbol, tuple(c * x for x in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def is_scalar(self) -> bool:
        return all(c.is_zero() for c in self.coords[1:])

    def __str__(self) -> str:
        c = self.coords
        return f"{c[0]} + ({c[1]}) i + ({c[2]}) j + ({c[3]}) ij"

    def to_json(self) -> list:
        return [str(c) for c in self.coords]

    @classmethod
    def from_json(cls, symbol, data) -> "AlgebraElement":
        return cls(symbol, tuple(symbol.field(c) for c in data))


def _table(alpha, beta, F):
    """Products e_r e_s of basis elements as coordinate 4-tuples."""
    z, o = F.zero_element, F.one_element
    ab = alpha * beta
    return {
        (0, 0): (o, z, z, z), (0, 1): (z, o, z, z), (0, 2): (z, z, o, z), (0, 3): (z, z, z, o),
        (1, 0): (z, o, z, z),
        (1, 1): (alpha, o, z, z),          # i^2 = i + alpha
        (1, 2): (z, z, z, o),              # i j = ij
        (1, 3): (z, z, alpha, o),          # i ij = (i + alpha) j
        (2, 0): (z, z, o, z),
        (2, 1): (z, z, o, o),              # j i = (i + 1) j
        (2, 2): (beta, z, z, z),           # j^2 = beta
        (2, 3): (beta, beta, z, z),        # j ij = (ij + j) j
        (3, 0): (z, z, z, o),
        (3, 1): (z, z, alpha, z),          # ij i = i (ij + j)
        (3, 2): (z, beta, z, z),           # ij j = beta i
        (3, 3): (ab, z, z, z),             # (ij)^2 = alpha beta
    }


def algebra_mul(p: AlgebraElement, q: AlgebraElement) -> AlgebraElement:
    p._check(q)
    Q = p.symbol
    F = Q.field
    table = _table(Q.alpha, Q.beta, F)
    out = [F.zero_element] * 4
    for r, pr in enumerate(p.coords):
        if pr.is_zero():
            continue
        for s, qs in enumerate(q.coords):
            if qs.is_zero():
                continue
            c = pr * qs
            for k, t in enumerate(table[(r, s)]):
                if not t.is_zero():
                    out[k] = out[k] + c * t
    return AlgebraElement(Q, tuple(out))


def commutator_sum(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """x y + y x."""
    return x * y + y * x
