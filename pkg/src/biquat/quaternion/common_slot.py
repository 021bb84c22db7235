"""Common slot of two isomorphic symbols via a square-central element.

Inside A = [a, b) with x = i, an element z = z0 + i + z2 j + z3 ij satisfies

    z^2 + z = wp(z0) + a + b N_a(z2, z3),

and every z with z^2 + z = alpha has this shape (its reduced trace is 1).
So z comes from an isotropic vector of [1, a + alpha] perp b[1, a].  Then
y = xz + zx = z2 j + z3 ij anticommutes with both x and z in the
characteristic-2 sense, and y^2 = b N_a(z2, z3) is central.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..field_core.artin_schreier import DEFAULT_BUDGET, UNKNOWN, SearchBudget, artin_schreier_solve
from ..quadratic_forms import (Block, QuadraticForm, SearchExhausted, albert_lemma_extract,
                               find_isotropic_vector)
from .algebra import AlgebraElement, commutator_sum
from .split import is_isomorphic
from .symbol import QuaternionSymbol


class PreconditionViolated(ValueError):
    """The symbols are not isomorphic, detected by post-verification."""


@dataclass(frozen=True)
class CommonSlot:
    e: object
    z: AlgebraElement
    y: AlgebraElement

    def __iter__(self):
        return iter((self.e, self.z, self.y))

    def commuting(self) -> bool:
        return self.y.is_zero()


def _find_z(Q1: QuaternionSymbol, alpha, budget: SearchBudget) -> AlgebraElement:
    F = Q1.field
    a, b = Q1.alpha, Q1.beta
    zero, one = F.zero_element, F.one_element
    lam = artin_schreier_solve(a + alpha, budget)
    if lam is not None and lam != UNKNOWN:
        return AlgebraElement(Q1, (lam, one, zero, zero))
    form = QuadraticForm([Block(one, one, a + alpha), Block(b, one, a)])
    res = find_isotropic_vector(form, budget)
    if not res:
        if res.status == UNKNOWN:
            raise SearchExhausted("common_slot z-search", res)
        raise PreconditionViolated("no z with z^2 + z = alpha: the symbols are not isomorphic")
    z0, (z2, z3) = albert_lemma_extract(a + alpha, QuadraticForm(form.blocks[1:]), res.vector)
    return AlgebraElement(Q1, (z0, one, z2, z3))


def common_slot(Q1: QuaternionSymbol, Q2: QuaternionSymbol,
                budget: SearchBudget = DEFAULT_BUDGET) -> CommonSlot:
    """(e, z, y) with [a, b) = [a, e) = [alpha, e) = [alpha, beta) for Q1 = [a, b), Q2 = [alpha, beta)."""
    if Q1.field != Q2.field:
        raise ValueError("symbols over different fields")
    if is_isomorphic(Q1, Q2, budget) is False:
        raise PreconditionViolated(f"{Q1} and {Q2} are not isomorphic")
    one = AlgebraElement.scalar(Q1, Q1.field.one_element)
    x = AlgebraElement.basis(Q1)[1]
    z = _find_z(Q1, Q2.alpha, budget)
    assert z * z + z == one * Q2.alpha, "z^2 + z = alpha failed"
    y = commutator_sum(x, z)
    if y.is_zero():
        e = Q1.beta
    else:
        ysq = y * y
        if not (commutator_sum(x, y) == y and commutator_sum(z, y) == y and ysq.is_scalar()):
            raise AssertionError("y is not square-central with the expected commutation")
        e = ysq.coords[0]
    chain = (Q1, QuaternionSymbol(Q1.alpha, e), QuaternionSymbol(Q2.alpha, e), Q2)
    for left, right in zip(chain, chain[1:]):
        verdict = is_isomorphic(left, right, budget)
        if verdict is False:
            raise PreconditionViolated(f"{left} and {right} are not isomorphic")
        if verdict == UNKNOWN:
            raise SearchExhausted("common_slot link verification")
    return CommonSlot(e, z, y)


__all__ = ["CommonSlot", "PreconditionViolated", "common_slot"]
