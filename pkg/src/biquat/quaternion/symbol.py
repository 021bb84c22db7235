"""Quaternion symbols [alpha, beta): i^2 + i = alpha, j^2 = beta, ji = (i + 1) j."""

from __future__ import annotations

from dataclasses import dataclass

from ..field_core.fields import FieldElement, FieldMismatchError


@dataclass(frozen=True)
class QuaternionSymbol:
    alpha: FieldElement
    beta: FieldElement

    def __post_init__(self):
        if self.alpha.field != self.beta.field:
            raise FieldMismatchError("symbol slots lie in different fields")
        if self.beta.is_zero():
            raise ValueError("the second slot of a symbol must be nonzero")

    @property
    def field(self):
        return self.alpha.field

    @classmethod
    def parse(cls, text: str, F) -> "QuaternionSymbol":
        from ..syntax import parse_symbol_text

        return cls(*parse_symbol_text(text, F))

    def __str__(self) -> str:
        return f"[{self.alpha}, {self.beta})"

    def __repr__(self) -> str:
        return f"QuaternionSymbol({self})"

    def to_json(self) -> list:
        return [str(self.alpha), str(self.beta)]

    @classmethod
    def from_json(cls, F, data) -> "QuaternionSymbol":
        return cls(F(data[0]), F(data[1]))
