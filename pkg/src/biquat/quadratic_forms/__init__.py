"""Characteristic-2 quadratic forms: blocks, Arf and Clifford invariants, isotropy."""

from .forms import (Block, QuadraticForm, arf_equal, arf_invariant, arf_is_trivial,
                    clifford_class)
from .albert import (InvalidWitness, LambdaBalance, SearchExhausted, albert_extract_common,
                     albert_form, albert_lemma_extract, lambda_balance, phi_form, universal_vector)
from .isotropy import (FOUND, NOT_FOUND, IsotropyResult, SearchResult, block_isotropic_vector,
                       exhaustive_isotropic, find_isotropic_vector, represent_value, conic_scale)

__all__ = ["Block", "QuadraticForm", "arf_equal", "arf_invariant", "arf_is_trivial",
           "clifford_class", "FOUND", "NOT_FOUND", "IsotropyResult", "SearchResult",
           "block_isotropic_vector", "exhaustive_isotropic", "find_isotropic_vector",
           "represent_value", "InvalidWitness", "LambdaBalance", "SearchExhausted",
           "albert_extract_common", "albert_form", "albert_lemma_extract", "lambda_balance",
           "phi_form", "universal_vector", "conic_scale"]
