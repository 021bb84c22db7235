"""Witt vectors and cyclic degree-2^n symbols [omega, beta) in characteristic 2."""

from .decompose import (DECOMP_VERSION, LEN3_BOUND, LEN4_BOUND, PAIR_BUDGET, SINGLE_BUDGET,
                        DecompClass, DecompositionCertificate, DecompositionReport, PreconditionFailed,
                        Unit, decompose_len3, decompose_len4, verify_decomposition)
from .symbols import (RULES, LogEntry, RuleError, SymbolEntry, SymbolExpr, apply_rule,
                      lemma41_common_t, lemma41_slot_add, merge_second, power_reduce, witt_absorb)
from .instances import (random_len3_instance, random_len3_one_sided, random_len3_witnessed,
                        random_len4_instance)
from .witt import (MAX_LENGTH, LengthMismatch, WittVector, addition_polynomials,
                   negation_polynomials, solve_e_coords, witt_add, witt_neg)

__all__ = [
    "WittVector", "LengthMismatch", "witt_add", "witt_neg", "solve_e_coords", "addition_polynomials",
    "negation_polynomials", "MAX_LENGTH", "RuleError", "SymbolEntry", "SymbolExpr", "LogEntry", "RULES",
    "apply_rule", "power_reduce", "lemma41_slot_add", "lemma41_common_t", "witt_absorb", "merge_second",
    "DECOMP_VERSION", "PAIR_BUDGET", "SINGLE_BUDGET", "LEN4_BOUND", "LEN3_BOUND", "PreconditionFailed",
    "Unit", "DecompClass", "DecompositionCertificate", "DecompositionReport", "decompose_len4",
    "decompose_len3", "verify_decomposition", "random_len3_instance", "random_len4_instance",
    "random_len3_one_sided", "random_len3_witnessed",
]
