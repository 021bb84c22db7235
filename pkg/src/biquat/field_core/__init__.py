from .fields import (FieldElement, FieldMismatchError, FiniteField, RationalFunctionField,
                     make_field, parse_field)
from .gf2k import GF2k

__all__ = ["FieldElement", "FieldMismatchError", "FiniteField", "GF2k", "RationalFunctionField",
           "make_field", "parse_field"]
