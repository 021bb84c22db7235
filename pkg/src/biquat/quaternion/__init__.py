"""Quaternion symbols [alpha, beta) in characteristic 2."""

from .algebra import AlgebraElement, SymbolMismatch, algebra_mul, commutator_sum
from .common_slot import CommonSlot, PreconditionViolated, common_slot
from .split import (NONSPLIT, SPLIT, InvariantVector, SplitResult, invariant_vector,
                    is_isomorphic, is_split, local_invariant)
from .symbol import QuaternionSymbol

__all__ = ["AlgebraElement", "SymbolMismatch", "algebra_mul", "commutator_sum", "CommonSlot",
           "PreconditionViolated", "common_slot", "NONSPLIT", "SPLIT", "InvariantVector",
           "SplitResult", "invariant_vector", "is_isomorphic", "is_split", "local_invariant",
           "QuaternionSymbol"]
