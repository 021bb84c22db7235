"""Local invariants of quaternion symbols [alpha, beta) over GF(2^k)(t).

The invariant at a place P is computed by the residue formula

    inv_P [alpha, beta) = Tr_{GF(2^k)/GF(2)} Res_P(alpha * dbeta / beta),

which is valid at every place, tame or wild.  Since the residues of a
differential sum to zero, reciprocity holds by construction; checking it
still guards the implementation.  ``regular_invariant`` gives the tame
formula v_P(beta) * Tr(alpha'(P)) as an independent cross-check.
"""

from __future__ import annotations

from .artin_schreier import INFINITY, Place, derivative, residue_data, trace_residue


class ReciprocityError(AssertionError):
    """Invariants failed to sum to zero: an implementation bug."""


def support_places(alpha, beta) -> list:
    """Places where [alpha, beta) can ramify, sorted, infinity last."""
    F = alpha.field
    R = F.ring
    found = {}
    for part in (beta.raw[0], beta.raw[1], alpha.raw[1]):
        if R.deg(part) > 0:
            for P, _ in R.factor(part):
                found.setdefault(R.key(P), P)
    return [Place(found[k]) for k in sorted(found)] + [INFINITY]


def symbol_invariants(alpha, beta) -> dict:
    """Map Place -> bit over the support places (zeros included)."""
    F = alpha.field
    if getattr(F, "kind", None) != "rational-1var":
        raise TypeError("local invariants need a field GF(2^k)(t)")
    if beta.is_zero():
        raise ValueError("beta must be nonzero")
    out = {}
    if alpha.is_zero():
        return {P: 0 for P in support_places(alpha, beta)}
    g = F.mul(alpha.raw, F.div(derivative(F, beta.raw), beta.raw))
    for P in support_places(alpha, beta):
        out[P] = 0 if F.is_zero(g) else trace_residue(F, g, P)
    if sum(out.values()) % 2:
        raise ReciprocityError(f"reciprocity fails for [{alpha}, {beta})")
    return out


def is_split_local(alpha, beta) -> bool:
    return not any(symbol_invariants(alpha, beta).values())


def regular_invariant(alpha, beta, place: Place):
    """v_P(beta) * Tr(alpha'(P)) when alpha' is regular at P, else None."""
    rd = residue_data(alpha, beta, place)
    if rd.alpha_pole_order:
        return None
    return (rd.beta_valuation * rd.residue_trace) % 2
