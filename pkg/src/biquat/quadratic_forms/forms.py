"""Nonsingular quadratic forms in characteristic 2 as sums of binary blocks."""

from __future__ import annotations

from dataclasses import dataclass

from ..field_core.artin_schreier import DEFAULT_BUDGET, UNKNOWN, artin_schreier_solve
from ..field_core.fields import FieldElement, FieldMismatchError


@dataclass(frozen=True)
class Block:
    """lam * [a, b], i.e. (x, y) -> lam * (a x^2 + x y + b y^2)."""

    lam: FieldElement
    a: FieldElement
    b: FieldElement

    def evaluate(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return self.lam * (self.a * x * x + x * y + self.b * y * y)

    def __str__(self) -> str:
        inner = f"[{self.a},{self.b}]"
        return inner if self.lam == 1 else f"({self.lam})*{inner}"


class QuadraticForm:
    """Orthogonal sum of blocks lam_i [a_i, b_i] over one field."""

    __slots__ = ("blocks", "field")

    def __init__(self, blocks):
        blocks = tuple(b if isinstance(b, Block) else Block(*b) for b in blocks)
        if not blocks:
            raise ValueError("a form needs at least one block")
        F = blocks[0].lam.field
        for blk in blocks:
            for x in (blk.lam, blk.a, blk.b):
                if x.field != F:
                    raise FieldMismatchError("blocks over different fields")
            if blk.lam.is_zero():
                raise ValueError("block scalars must be nonzero")
        self.blocks = blocks
        self.field = F

    @classmethod
    def block(cls, lam, a, b) -> "QuadraticForm":
        return cls([Block(lam, a, b)])

    @property
    def dim(self) -> int:
        return 2 * len(self.blocks)

    def perp(self, other: "QuadraticForm") -> "QuadraticForm":
        return QuadraticForm(self.blocks + other.blocks)

    __add__ = perp

    def scaled(self, c: FieldElement) -> "QuadraticForm":
        return QuadraticForm([Block(c * b.lam, b.a, b.b) for b in self.blocks])

    def evaluate(self, v) -> FieldElement:
        v = list(v)
        if len(v) != self.dim:
            raise ValueError(f"vector of length {len(v)} for a form of dimension {self.dim}")
        F = self.field
        total = F.zero_element
        for i, blk in enumerate(self.blocks):
            total = total + blk.evaluate(F(v[2 * i]), F(v[2 * i + 1]))
        return total

    def to_json(self) -> list:
        return [[str(b.lam), str(b.a), str(b.b)] for b in self.blocks]

    @classmethod
    def from_json(cls, F, data) -> "QuadraticForm":
        return cls([Block(F(l), F(a), F(b)) for l, a, b in data])

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadraticForm) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __str__(self) -> str:
        return " perp ".join(str(b) for b in self.blocks)

    __repr__ = __str__


def arf_invariant(form: QuadraticForm) -> FieldElement:
    """Representative sum a_i b_i of the Arf invariant (class modulo wp(F)).

    lam [a, b] is isometric to [lam a, b / lam], whose contribution is a b.
    """
    total = form.field.zero_element
    for blk in form.blocks:
        total = total + blk.a * blk.b
    return total


def arf_equal(x: FieldElement, y: FieldElement, budget=DEFAULT_BUDGET):
    """True/False when x + y is decided in or out of wp(F); UNKNOWN otherwise."""
    r = artin_schreier_solve(x + y, budget)
    if r == UNKNOWN:
        return UNKNOWN
    return r is not None


def arf_is_trivial(form: QuadraticForm, budget=DEFAULT_BUDGET):
    return arf_equal(arf_invariant(form), form.field.zero_element, budget)


def block_clifford_symbol(blk: Block):
    """Contribution of a single block, or None for a hyperbolic block [0, b]/[a, 0]."""
    from ..quaternion.symbol import QuaternionSymbol

    if blk.a.is_zero() or blk.b.is_zero():
        return None
    if blk.a == 1:
        return QuaternionSymbol(blk.b, blk.lam)
    if blk.b == 1 and blk.lam == 1:
        return QuaternionSymbol(blk.a, blk.lam.field.one_element)
    # lam [a, b] ~ (lam / a) [1, a b]
    return QuaternionSymbol(blk.a * blk.b, blk.lam / blk.a)


def clifford_class(form: QuadraticForm) -> list:
    """Formal tensor word of quaternion symbols for the Clifford invariant.

    Each block lam [1, a] gives [a, lam); a block [m, 1] gives the split
    symbol [m, 1); hyperbolic blocks give nothing.
    """
    word = []
    for blk in form.blocks:
        sym = block_clifford_symbol(blk)
        if sym is not None:
            word.append(sym)
    return word
